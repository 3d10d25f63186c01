#include "gelfand/shooting.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

namespace gelfand {

std::string to_string(OutcomeTag t) {
    switch (t) {
        case OutcomeTag::GlobalToHorizon: return "GlobalToHorizon";
        case OutcomeTag::BlowUp: return "BlowUp";
        case OutcomeTag::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

Outcome classify(const Trajectory& trajectory) {
    Outcome out;
    out.source = trajectory.terminal_event;
    out.r_event = trajectory.r_event;
    if (!trajectory.samples.empty()) out.tail = trajectory.terminal();
    switch (trajectory.terminal_event) {
        case TerminalEvent::FluxSignEvent:
        case TerminalEvent::OverflowGuard:
            out.tag = OutcomeTag::BlowUp;
            break;
        case TerminalEvent::ReachedHorizon: {
            const auto m = static_cast<std::size_t>(trajectory.problem.m);
            const bool ok = !trajectory.problem.m_even() || (!out.tail.w.empty() && out.tail.w[m - 1] < 0.0);
            out.tag = ok ? OutcomeTag::GlobalToHorizon : OutcomeTag::Inconclusive;
            break;
        }
        case TerminalEvent::Failure:
            out.tag = OutcomeTag::Inconclusive;
            break;
    }
    return out;
}

Outcome classify_ic(const ProblemSpec& problem, const InitialConditions& ic, const IntegratorConfig& config) {
    try {
        return classify(integrate(problem, ic, config));
    } catch (const IntegrationFailure& f) {
        return classify(f.partial());
    }
}

ShootingResult phi_alpha(const ProblemSpec& problem, double alpha, const std::vector<double>& beta_prime,
                         double tol, const IntegratorConfig& config) {
    if (!problem.m_even()) throw DomainError("phi_alpha: m must be even");
    if (problem.n < 3) throw DomainError("phi_alpha: n must be >= 3");
    if (!(tol > 0.0)) throw DomainError("phi_alpha: tol must be positive");
    if (beta_prime.size() != static_cast<std::size_t>(problem.m - 2))
        throw DomainError("phi_alpha: beta' must have m-2 entries");

    ShootingResult res;
    res.problem = problem;
    res.alpha = alpha;
    res.beta_prime = beta_prime;

    InitialConditions ic;
    ic.alpha.push_back(alpha);
    ic.alpha.insert(ic.alpha.end(), beta_prime.begin(), beta_prime.end());
    ic.alpha.push_back(0.0);
    ic.validate(problem);

    const auto trial = [&](double beta) {
        ic.alpha.back() = beta;
        ++res.evaluations;
        const Outcome o = classify_ic(problem, ic, config);
        if (o.tag == OutcomeTag::Inconclusive) {
            std::ostringstream os;
            os.precision(17);
            os << "beta=" << beta << " inconclusive (" << to_string(o.source) << "), treated as blow-up side";
            res.warnings.push_back(os.str());
        }
        return o.tag;
    };

    res.b_blowup = 0.0;
    if (trial(0.0) == OutcomeTag::GlobalToHorizon)
        throw NumericalError("phi_alpha: beta = 0 classified global; the horizon or tolerances are inconsistent");

    double b = -1.0;
    while (trial(b) != OutcomeTag::GlobalToHorizon) {
        res.b_blowup = b;
        b *= 2.0;
        if (b < -1e12) throw NumericalError("phi_alpha: no global endpoint found above beta = -1e12");
    }
    res.b_global = b;

    while (res.b_blowup - res.b_global > tol) {
        const double mid = 0.5 * (res.b_blowup + res.b_global);
        if (mid <= res.b_global || mid >= res.b_blowup) break;  // bracket at rounding level
        if (trial(mid) == OutcomeTag::GlobalToHorizon) res.b_global = mid;
        else res.b_blowup = mid;
    }
    res.phi_estimate = 0.5 * (res.b_blowup + res.b_global);
    res.tolerance_achieved = res.b_blowup - res.b_global;
    return res;
}

std::vector<std::pair<double, double>> scan_phi_monotonicity(const ProblemSpec& problem, double alpha, int axis,
                                                             const std::vector<double>& grid, double tol,
                                                             const IntegratorConfig& config, unsigned workers) {
    if (!problem.m_even() || problem.m < 4) throw DomainError("scan_phi_monotonicity: m must be even and >= 4");
    if (axis < 1 || axis > problem.m - 2) throw DomainError("scan_phi_monotonicity: axis must lie in 1..m-2");
    if (grid.empty()) throw DomainError("scan_phi_monotonicity: empty grid");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) throw DomainError("scan_phi_monotonicity: grid must be strictly increasing");

    std::vector<std::pair<double, double>> out(grid.size());
    std::vector<std::exception_ptr> errors(grid.size());
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            try {
                std::vector<double> bp(static_cast<std::size_t>(problem.m - 2), 0.0);
                bp[static_cast<std::size_t>(axis - 1)] = grid[i];
                out[i] = {grid[i], phi_alpha(problem, alpha, bp, tol, config).phi_estimate};
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned nthreads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(grid.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

ComparisonReport compare_trajectories(const Trajectory& u, const Trajectory& v) {
    if (!(u.problem == v.problem)) throw DomainError("comparison_check: trajectories solve different problems");
    const double rtol = std::max(u.config.rtol, v.config.rtol);
    const auto m = static_cast<std::size_t>(u.problem.m);
    ComparisonReport rep;
    bool first = true;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < u.samples.size() && j < v.samples.size()) {
        const auto& a = u.samples[i];
        const auto& b = v.samples[j];
        if (a.r < b.r) {
            ++i;
            continue;
        }
        if (b.r < a.r) {
            ++j;
            continue;
        }
        ++rep.compared_samples;
        for (std::size_t c = 0; c < 2 * m; ++c) {
            const double x = c < m ? a.w[c] : a.dw[c - m];
            const double y = c < m ? b.w[c] : b.dw[c - m];
            const double gap = x - y;
            if (first || gap < rep.min_gap) rep.min_gap = gap;
            first = false;
            const double slack = 10.0 * rtol * std::max({1.0, std::abs(x), std::abs(y)});
            if (gap < -slack && !rep.first_violation) {
                rep.holds = false;
                rep.first_violation = ComparisonViolation{a.r, static_cast<int>(c), gap};
            }
        }
        ++i;
        ++j;
    }
    return rep;
}

ComparisonReport comparison_check(const ProblemSpec& problem, const InitialConditions& ic_u,
                                  const InitialConditions& ic_v, const IntegratorConfig& config) {
    ic_u.validate(problem);
    ic_v.validate(problem);
    const auto run = [&](const InitialConditions& ic) {
        try {
            return integrate(problem, ic, config);
        } catch (const IntegrationFailure& f) {
            return f.partial();
        }
    };
    return compare_trajectories(run(ic_u), run(ic_v));
}

}  // namespace gelfand
