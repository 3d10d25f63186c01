// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "gelfand/asymptotics.hpp"
#include "gelfand/constants.hpp"
#include "gelfand/explicit_solution.hpp"
#include "gelfand/hr_verify.hpp"
#include "gelfand/shooting.hpp"
#include "gelfand/spectrum.hpp"
#include "gelfand/stability.hpp"

using namespace gelfand;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) detail << "failed: ";
            else detail << "; ";
            detail << what;
            ok = false;
        }
    }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void(Check&)>& body) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0) c.require(secs < budget_s, "runtime " + std::to_string(secs) + " s over budget");
    if (!c.ok) ++failures;
    std::printf("AC%-2d %s  %s (%.2f s)%s%s\n", id, c.ok ? "PASS" : "FAIL", title, secs, c.detail.str().empty() ? "" : "  ",
                c.detail.str().c_str());
    std::fflush(stdout);
}

Trajectory boundary_interior(const ProblemSpec& p, double alpha, const std::vector<double>& beta_prime, double depth) {
    const auto s = phi_alpha(p, alpha, beta_prime, 1e-8);
    std::vector<double> a{alpha};
    a.insert(a.end(), beta_prime.begin(), beta_prime.end());
    a.push_back(s.phi_estimate - depth);
    return integrate(p, InitialConditions{a});
}

}  // namespace

int main() {
    criterion(1, "critical dimensions n*(2) = 13, n*(4) = 18", 1.0, [](Check& c) {
        c.require(n_star(2) == 13, "n*(2) = " + std::to_string(n_star(2)));
        c.require(n_star(4) == 18, "n*(4) = " + std::to_string(n_star(4)));
    });

    criterion(2, "nonreal roots of P_m: m=1 iff n<=9, m=2 iff n<=12, (4,18) nonreal", 1.0, [](Check& c) {
        for (int n = 3; n <= 30; ++n)
            c.require(Pm_roots(1, n, 1e-8).has_nonreal == (n <= 9), "m=1 n=" + std::to_string(n));
        for (int n = 5; n <= 30; ++n)
            c.require(Pm_roots(2, n, 1e-8).has_nonreal == (n <= 12), "m=2 n=" + std::to_string(n));
        c.require(Pm_roots(4, 18, 1e-8).has_nonreal, "m=4 n=18");
    });

    criterion(3, "phi_alpha(m=2, n=4, 4 log 2 + log 24) = -32 within 1%", 60.0, [](Check& c) {
        const double alpha = 4.0 * std::log(2.0) + std::log(24.0);
        const auto r = phi_alpha(ProblemSpec::make(2, 4), alpha, {}, 1e-6);
        c.require(std::abs(r.phi_estimate + 32.0) <= 0.32, "phi = " + std::to_string(r.phi_estimate));
        c.detail << "phi = " << r.phi_estimate;
    });

    criterion(4, "blow-up: flux event for beta=0 (n=3,5); 20 random ICs blow up for n=1,2", 30.0, [](Check& c) {
        for (int n : {3, 5}) {
            const auto o = classify_ic(ProblemSpec::make(2, n), InitialConditions{{0.0, 0.0}}, {});
            c.require(o.tag == OutcomeTag::BlowUp && o.source == TerminalEvent::FluxSignEvent, "n=" + std::to_string(n));
        }
        std::mt19937_64 rng(4);
        std::uniform_real_distribution<double> A(-1.0, 1.0);
        std::uniform_real_distribution<double> B(-3.0, 0.0);
        IntegratorConfig far;
        far.r_max = 1e8;
        for (int n : {1, 2}) {
            int blown = 0;
            for (int i = 0; i < 20; ++i) {
                const auto o = classify_ic(ProblemSpec::make(2, n), InitialConditions{{A(rng), B(rng)}}, far);
                if (o.tag == OutcomeTag::BlowUp) ++blown;
            }
            c.require(blown == 20, "n=" + std::to_string(n) + ": " + std::to_string(blown) + "/20 blow up");
        }
    });

    criterion(5, "interior growth coefficient matches ell / (2^{m-1}(m-1)! prod(n+2l-2)) within 2%", 60.0, [](Check& c) {
        for (auto [m, n] : {std::pair{2, 5}, std::pair{4, 9}}) {
            const auto p = ProblemSpec::make(m, n);
            const auto t = boundary_interior(p, 0.0, std::vector<double>(static_cast<std::size_t>(m - 2), 0.0), 5.0);
            c.require(t.terminal_event == TerminalEvent::ReachedHorizon, "trajectory not global");
            const auto ell = estimate_ell(t);
            const double fitted = fit_leading_coefficient(t, 2.0 * m - 2.0);
            const double predicted = predicted_leading_coefficient(m, n, ell.ell);
            const double rel = std::abs(fitted / predicted - 1.0);
            c.require(rel <= 0.02, "m=" + std::to_string(m) + " relative error " + std::to_string(rel));
            c.detail << (m == 2 ? "" : ", ") << "m=" << m << " rel " << rel;
        }
    });

    criterion(6, "boundary trajectory: w0 + 4 log r bounded above, non-increasing over the last decade", 0.0, [](Check& c) {
        const auto p = ProblemSpec::make(2, 5);
        const auto s = phi_alpha(p, 0.0, {}, 1e-6);
        const auto t = integrate(p, InitialConditions{{0.0, s.b_global}});
        c.require(t.terminal_event == TerminalEvent::ReachedHorizon, "global endpoint did not reach the horizon");
        double sup = -INFINITY;
        for (const auto& x : t.samples) sup = std::max(sup, x.w[0] + 4.0 * std::log(x.r));
        c.require(std::isfinite(sup), "unbounded");
        // least-squares slope of w0 + 4 log r against log r over the last decade
        const double r_last = t.samples.back().r;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int cnt = 0;
        for (const auto& x : t.samples) {
            if (x.r < r_last / 10.0) continue;
            const double lx = std::log(x.r);
            const double y = x.w[0] + 4.0 * lx;
            sx += lx;
            sy += y;
            sxx += lx * lx;
            sxy += lx * y;
            ++cnt;
        }
        const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
        c.require(slope <= 0.0, "last-decade slope " + std::to_string(slope));
        c.detail << "sup " << sup << ", last-decade slope " << slope;
    });

    criterion(7, "comparison principle on 100 ordered pairs for (2,3), (2,5), (4,9)", 120.0, [](Check& c) {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> A(-2.0, 2.0);
        std::uniform_real_distribution<double> D(0.0, 1.0);
        for (auto [m, n] : {std::pair{2, 3}, std::pair{2, 5}, std::pair{4, 9}}) {
            const auto p = ProblemSpec::make(m, n);
            int held = 0;
            for (int i = 0; i < 100; ++i) {
                std::vector<double> v(static_cast<std::size_t>(m));
                std::vector<double> u(v.size());
                for (std::size_t k = 0; k < v.size(); ++k) {
                    v[k] = A(rng);
                    u[k] = v[k] + D(rng);
                }
                if (comparison_check(p, InitialConditions{u}, InitialConditions{v}).holds) ++held;
            }
            c.require(held == 100, "(" + std::to_string(m) + "," + std::to_string(n) + "): " + std::to_string(held) + "/100");
        }
    });

    criterion(8, "Hardy-Rellich margins on 50 bumps per inequality; mu(n,0) = A(n,1)", 0.0, [](Check& c) {
        std::mt19937_64 rng(8);
        std::uniform_real_distribution<double> U(0.0, 1.0);
        const double e2 = std::exp(2.0);
        const struct {
            HRInequality v;
            HRQuery q;
            double R;
        } cases[] = {{HRInequality::Rellich, {5, 1, 0.0, 0.0}, 1.0},
                     {HRInequality::RellichGradient, {7, 1, 0.0, 0.0}, 1.0},
                     {HRInequality::LogSecondOrder, {4, 0, 0.0, 0.0}, e2},
                     {HRInequality::LogRellich, {2, 1, 0.0, 0.0}, e2},
                     {HRInequality::OneDimensional, {1, 1, 0.0, 0.0}, 1.0}};
        for (const auto& cs : cases) {
            const bool log_form = cs.v == HRInequality::LogSecondOrder || cs.v == HRInequality::LogRellich;
            int ok = 0;
            for (int i = 0; i < 50; ++i) {
                const double a = (log_form ? cs.R : 0.0) + 0.01 + 5.0 * U(rng);
                const double b = a * (1.05 + 20.0 * U(rng));
                const auto r = verify_hr_inequality(cs.v, cs.q, RadialTestFunction::bump(a, b), cs.R);
                if (r.lhs > 0.0 && r.margin >= -1e-10 * r.rhs) ++ok;
            }
            c.require(ok == 50, to_string(cs.v) + ": " + std::to_string(ok) + "/50");
        }
        for (int n = 5; n <= 40; ++n) c.require(hr_mu(n, 0.0).value == A_const(n, 1), "mu(" + std::to_string(n) + ",0)");
    });

    criterion(9, "instability witnesses on global trajectories for (2,3), (2,4), (3,5)", 60.0, [](Check& c) {
        const auto t23 = boundary_interior(ProblemSpec::make(2, 3), 0.0, {}, 1.0);
        const auto t24 = explicit_trajectory(ExplicitSolution::make(2, 1.0));
        const auto t35 = integrate(ProblemSpec::make(3, 5), InitialConditions{{0.0, 1.0, 0.0}});
        const struct {
            const Trajectory* t;
            Family f;
        } cases[] = {{&t23, Family::ScaledCutoff}, {&t24, Family::DyadicSum}, {&t35, Family::ScaledCutoff}};
        for (const auto& cs : cases) {
            const auto& p = cs.t->problem;
            const std::string tag = "(" + std::to_string(p.m) + "," + std::to_string(p.n) + ")";
            c.require(classify(*cs.t).tag == OutcomeTag::GlobalToHorizon, tag + " not global");
            const auto rep = instability_search(RadialProfile::from_trajectory(*cs.t), p, cs.f);
            c.require(rep.verdict == Verdict::InstabilityWitnessFound, tag + " no witness");
            if (rep.witness) c.detail << tag << " at " << *rep.witness << " ";
        }
    });

    criterion(10, "outside-compact certificates: (3,5) alpha=(0,1,0); (2,5) interior; explicit (2,4)", 0.0, [](Check& c) {
        const Trajectory ts[] = {integrate(ProblemSpec::make(3, 5), InitialConditions{{0.0, 1.0, 0.0}}),
                                 boundary_interior(ProblemSpec::make(2, 5), 0.0, {}, 1.0),
                                 explicit_trajectory(ExplicitSolution::make(2, 1.0))};
        const char* names[] = {"(a)", "(b)", "(c)"};
        for (int i = 0; i < 3; ++i) {
            const auto rep = socs_certificate(ts[i]);
            c.require(rep.verdict == Verdict::CertifiedOutsideCompact, std::string(names[i]) + " " + to_string(rep.verdict));
            c.detail << names[i] << " R=" << rep.certificate_radius << " ";
        }
    });

    criterion(11, "m=3 globality for n=1,5 (20 ICs each); nonsymmetric 1-D data global both ways", 0.0, [](Check& c) {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> A(-2.0, 2.0);
        IntegratorConfig cfg;
        cfg.r_max = 1e3;
        for (int n : {1, 5}) {
            int global = 0;
            for (int i = 0; i < 20; ++i) {
                const auto t = integrate(ProblemSpec::make(3, n), InitialConditions{{A(rng), A(rng), A(rng)}}, cfg);
                if (t.terminal_event == TerminalEvent::ReachedHorizon && t.terminal().r == 1e3) ++global;
            }
            c.require(global == 20, "n=" + std::to_string(n) + ": " + std::to_string(global) + "/20");
        }
        for (int dir : {1, -1}) {
            const auto l = integrate_line(3, {0.0, 1.0, 0.0, 0.0, 0.0, 0.0}, 1e3, dir, cfg);
            c.require(l.terminal_event == TerminalEvent::ReachedHorizon && l.x_end == dir * 1e3,
                      dir > 0 ? "toward +x" : "toward -x");
        }
    });

    criterion(12, "explicit residual <= 1e-8 on [0.1, 10]; Cauchy round trip within 100 rtol", 0.0, [](Check& c) {
        const auto sol = ExplicitSolution::make(2, 1.0);
        std::vector<double> rs;
        for (int i = 0; i <= 400; ++i) rs.push_back(0.1 * std::pow(100.0, i / 400.0));
        const double res = explicit_residual(sol, rs);
        c.require(res <= 1e-8, "residual " + std::to_string(res));
        const IntegratorConfig cfg;
        const auto t = integrate(ProblemSpec::make(2, 4), explicit_initial_values(2, 1.0), cfg);
        double worst = 0.0;
        for (const auto& s : t.samples) {
            if (s.r > 10.0) break;
            const double ex = eval_explicit(sol, s.r);
            worst = std::max(worst, std::abs(s.w[0] - ex) / std::max(1.0, std::abs(ex)));
        }
        c.require(worst <= 100.0 * cfg.rtol, "round trip " + std::to_string(worst));
        c.detail << "residual " << res << ", round trip " << worst;
    });

    criterion(13, "Emden residual: zero for w = 0; linear mode (m=1, n=12) within 1e-9 + FD bound", 0.0, [](Check& c) {
        const auto p = ProblemSpec::make(1, 12);
        EmdenSamples zero;
        zero.m = 1;
        zero.lambda_S = lambda_S(1, 12);
        for (int i = 0; i < 200; ++i) {
            zero.s.push_back(0.01 * i);
            zero.w.push_back(0.0);
        }
        c.require(emden_residual(zero, p).max_residual == 0.0, "w = 0 residual not exactly zero");
        double t0 = NAN;
        for (const auto& r : Pm_roots(1, 12).roots)
            if (r.z.imag() == 0.0) t0 = r.z.real();
        c.require(std::isfinite(t0), "no real root");
        EmdenSamples lin = zero;
        const double eps = 1e-6;
        const double h = 0.01;
        for (std::size_t i = 0; i < lin.s.size(); ++i) lin.w[i] = eps * std::exp(t0 * lin.s[i]);
        const double res = emden_residual(lin, p).max_residual;
        // fourth-order stencils: |coefficients| h^4 max |w^(6)| / 30
        const auto q = Qm_coefficients(1, 12);
        double qsum = 0.0;
        for (double x : q) qsum += std::abs(x);
        const double fd = qsum * std::pow(h, 4) * eps * std::pow(std::abs(t0), 6) / 30.0;
        c.require(res <= 1e-9 + fd, "residual " + std::to_string(res));
        c.detail << "residual " << res << ", budget " << 1e-9 + fd;
    });

    std::printf("%d of 13 criteria failed\n", failures);
    return failures;
}
