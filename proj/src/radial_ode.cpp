#include "gelfand/radial_ode.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <sstream>

#include "gelfand/dopri5.hpp"

namespace gelfand {

namespace {

// largest argument with exp(x) finite in double precision
constexpr double kExpLimit = 709.78;

bool radial_rhs(const ProblemSpec& p, double r, std::span<const double> y, std::span<double> dy) {
    const auto m = static_cast<std::size_t>(p.m);
    if (y[0] > kExpLimit) return false;
    const double damping = static_cast<double>(p.n - 1) / r;
    for (std::size_t k = 0; k < m; ++k) {
        dy[k] = y[m + k];
        const double forcing = k + 1 < m ? y[k + 1] : static_cast<double>(p.sign()) * std::exp(y[0]);
        dy[m + k] = forcing - damping * y[m + k];
    }
    return true;
}

std::vector<double> pack(const RadialState& s) {
    std::vector<double> y(s.w);
    y.insert(y.end(), s.dw.begin(), s.dw.end());
    return y;
}

RadialState unpack(double r, std::span<const double> y, std::size_t m) {
    RadialState s;
    s.r = r;
    s.w.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(m));
    s.dw.assign(y.begin() + static_cast<std::ptrdiff_t>(m), y.begin() + static_cast<std::ptrdiff_t>(2 * m));
    return s;
}

std::vector<double> log_grid(double r0, double r_max, int per_decade) {
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        const double r = r0 * std::pow(10.0, static_cast<double>(i) / per_decade);
        if (r >= r_max * (1.0 - 1e-12)) break;
        grid.push_back(r);
    }
    grid.push_back(r_max);
    return grid;
}

}  // namespace

ProblemSpec ProblemSpec::make(int m, int n) {
    if (m < 1) throw DomainError("order m must be >= 1");
    if (n < 1) throw DomainError("dimension n must be >= 1");
    return ProblemSpec{m, n};
}

void InitialConditions::validate(const ProblemSpec& problem) const {
    if (alpha.size() != static_cast<std::size_t>(problem.m)) {
        std::ostringstream os;
        os << "expected " << problem.m << " initial values, got " << alpha.size();
        throw DomainError(os.str());
    }
    for (double a : alpha)
        if (!std::isfinite(a)) throw DomainError("initial values must be finite");
}

void IntegratorConfig::validate() const {
    if (!(rtol > 0.0) || !(atol > 0.0)) throw DomainError("rtol and atol must be positive");
    if (!(r0 > 0.0) || !(r_max > r0)) throw DomainError("need 0 < r0 < r_max");
    if (!std::isfinite(u_overflow) || !std::isfinite(r_max)) throw DomainError("u_overflow and r_max must be finite");
    if (points_per_decade < 1) throw DomainError("points_per_decade must be >= 1");
}

std::string to_string(TerminalEvent e) {
    switch (e) {
        case TerminalEvent::ReachedHorizon: return "ReachedHorizon";
        case TerminalEvent::OverflowGuard: return "OverflowGuard";
        case TerminalEvent::FluxSignEvent: return "FluxSignEvent";
        case TerminalEvent::Failure: return "Failure";
    }
    return "Failure";
}

TerminalEvent terminal_event_from_string(const std::string& s) {
    for (auto e : {TerminalEvent::ReachedHorizon, TerminalEvent::OverflowGuard,
                   TerminalEvent::FluxSignEvent, TerminalEvent::Failure})
        if (to_string(e) == s) return e;
    throw DomainError("unknown terminal event '" + s + "'");
}

std::vector<double> rhs(const ProblemSpec& problem, const RadialState& state) {
    if (!(state.r > 0.0)) throw DomainError("rhs: radius must be positive");
    const std::vector<double> y = pack(state);
    std::vector<double> dy(y.size());
    if (!radial_rhs(problem, state.r, y, dy))
        throw NumericalError("rhs: exp(w_0) overflows; the overflow guard should have stopped integration");
    return dy;
}

RadialState taylor_start(const ProblemSpec& problem, const InitialConditions& ic, double r0) {
    ic.validate(problem);
    if (!(r0 > 0.0)) throw DomainError("taylor_start: r0 must be positive");
    const auto m = static_cast<std::size_t>(problem.m);
    const auto n = static_cast<double>(problem.n);
    RadialState s;
    s.r = r0;
    s.w.resize(m);
    s.dw.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double f = k + 1 < m ? ic.alpha[k + 1] : problem.sign() * std::exp(ic.alpha[0]);
        s.w[k] = ic.alpha[k] + f * r0 * r0 / (2.0 * n);
        s.dw[k] = f * r0 / n;
    }
    return s;
}

Trajectory integrate(const ProblemSpec& problem, const InitialConditions& ic,
                     const IntegratorConfig& config) {
    config.validate();
    ic.validate(problem);
    const auto m = static_cast<std::size_t>(problem.m);

    Trajectory traj;
    traj.problem = problem;
    traj.ic = ic;
    traj.config = config;

    const RadialState start = taylor_start(problem, ic, config.r0);
    traj.samples.push_back(start);
    traj.r_event = config.r0;

    const bool flux_armed = problem.flux_event_armed();
    if (flux_armed && start.w[m - 1] >= 0.0) {
        traj.terminal_event = TerminalEvent::FluxSignEvent;
        return traj;
    }
    if (start.w[0] > config.u_overflow) {
        traj.terminal_event = TerminalEvent::OverflowGuard;
        return traj;
    }

    DormandPrince5 stepper(
        [&problem](double r, std::span<const double> y, std::span<double> dy) {
            return radial_rhs(problem, r, y, dy);
        },
        2 * m, config.rtol, config.atol);
    stepper.reset(config.r0, pack(start), 0.01 * config.r0);

    const std::vector<double> grid = log_grid(config.r0, config.r_max, config.points_per_decade);
    std::vector<double> probe(2 * m);

    const auto finish_stats = [&] {
        traj.stats = {stepper.accepted_steps(), stepper.rejected_steps(), stepper.evaluations()};
    };

    // first radius in (t_prev, t] where g >= 0, located by bisection on the dense output
    const auto locate = [&](auto g) {
        double lo = stepper.t_prev();
        double hi = stepper.t();
        while (hi - lo > config.rtol * hi) {
            const double mid = 0.5 * (lo + hi);
            stepper.interpolate(mid, probe);
            (g(probe) >= 0.0 ? hi : lo) = mid;
        }
        return hi;
    };

    for (std::size_t idx = 1; idx < grid.size();) {
        const double target = grid[idx];
        try {
            stepper.step(target);
        } catch (const NumericalError& e) {
            finish_stats();
            traj.terminal_event = TerminalEvent::Failure;
            traj.r_event = traj.samples.back().r;
            throw IntegrationFailure(e.what(), std::move(traj));
        }

        const auto y = stepper.y();
        double r_hit = stepper.t() * 2.0;
        TerminalEvent hit = TerminalEvent::ReachedHorizon;
        if (flux_armed && y[m - 1] >= 0.0) {
            r_hit = locate([m](std::span<const double> v) { return v[m - 1]; });
            hit = TerminalEvent::FluxSignEvent;
        }
        if (y[0] > config.u_overflow) {
            const double r_over = locate([&](std::span<const double> v) { return v[0] - config.u_overflow; });
            if (r_over < r_hit) {
                r_hit = r_over;
                hit = TerminalEvent::OverflowGuard;
            }
        }
        if (hit != TerminalEvent::ReachedHorizon) {
            std::vector<double> state;
            if (r_hit >= stepper.t() || !stepper.step_from_previous(r_hit - stepper.t_prev(), state)) {
                r_hit = stepper.t();
                state.assign(y.begin(), y.end());
            }
            if (r_hit > traj.samples.back().r) traj.samples.push_back(unpack(r_hit, state, m));
            traj.terminal_event = hit;
            traj.r_event = r_hit;
            finish_stats();
            return traj;
        }

        if (stepper.t() == target) {
            traj.samples.push_back(unpack(target, y, m));
            ++idx;
        }
    }
    traj.terminal_event = TerminalEvent::ReachedHorizon;
    traj.r_event = traj.samples.back().r;
    finish_stats();
    return traj;
}

double interpolate_u(const Trajectory& trajectory, double r) {
    const auto& s = trajectory.samples;
    if (s.empty()) throw DomainError("interpolate_u: empty trajectory");
    if (r <= s.front().r) {
        const RadialState t = taylor_start(trajectory.problem, trajectory.ic, std::max(r, 1e-300));
        return r <= 0.0 ? trajectory.ic.alpha[0] : t.w[0];
    }
    if (r > s.back().r) throw DomainError("interpolate_u: radius beyond the computed range");
    const auto it = std::lower_bound(s.begin(), s.end(), r,
                                     [](const RadialState& a, double x) { return a.r < x; });
    const RadialState& b = *it;
    const RadialState& a = *(it - 1);
    const double h = b.r - a.r;
    const double t = (r - a.r) / h;
    const double h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
    const double h10 = t * (1.0 - t) * (1.0 - t);
    const double h01 = t * t * (3.0 - 2.0 * t);
    const double h11 = t * t * (t - 1.0);
    return h00 * a.w[0] + h10 * h * a.dw[0] + h01 * b.w[0] + h11 * h * b.dw[0];
}

LineTrajectory integrate_line(int m, const std::vector<double>& derivatives_at_zero, double x_max,
                              int direction, const IntegratorConfig& config, std::size_t samples) {
    if (m < 1) throw DomainError("integrate_line: m must be >= 1");
    const auto dim = static_cast<std::size_t>(2 * m);
    if (derivatives_at_zero.size() != dim) throw DomainError("integrate_line: need 2m Cauchy values");
    if (!(x_max > 0.0)) throw DomainError("integrate_line: x_max must be positive");
    if (direction != 1 && direction != -1) throw DomainError("integrate_line: direction must be +1 or -1");
    if (samples < 2) throw DomainError("integrate_line: need at least two samples");

    // v(x) = u(direction * x) solves the same equation with odd derivatives flipped
    std::vector<double> y0(derivatives_at_zero);
    for (std::size_t k = 1; k < dim; k += 2) y0[k] *= direction;
    const double s = m % 2 == 0 ? 1.0 : -1.0;

    DormandPrince5 stepper(
        [dim, s](double, std::span<const double> y, std::span<double> dy) {
            if (y[0] > kExpLimit) return false;
            for (std::size_t k = 0; k + 1 < dim; ++k) dy[k] = y[k + 1];
            dy[dim - 1] = s * std::exp(y[0]);
            return true;
        },
        dim, config.rtol, config.atol);
    stepper.reset(0.0, y0, 1e-3);

    LineTrajectory out;
    out.m = m;
    out.direction = direction;
    out.x.push_back(0.0);
    out.u.push_back(y0[0]);
    for (std::size_t i = 1; i < samples; ++i) {
        const double target = x_max * static_cast<double>(i) / static_cast<double>(samples - 1);
        while (stepper.t() < target) {
            stepper.step(target);
            if (stepper.y()[0] > config.u_overflow) {
                out.terminal_event = TerminalEvent::OverflowGuard;
                out.x_end = direction * stepper.t();
                return out;
            }
        }
        out.x.push_back(direction * target);
        out.u.push_back(stepper.y()[0]);
    }
    out.x_end = direction * x_max;
    return out;
}

}  // namespace gelfand
