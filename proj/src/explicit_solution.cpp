#include "gelfand/explicit_solution.hpp"

#include <cmath>

#include "gelfand/quadrature.hpp"

namespace gelfand {

ExplicitSolution ExplicitSolution::make(int m, double lambda) {
    if (m < 1) throw DomainError("explicit solution: m must be >= 1");
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("explicit solution: lambda must be positive");
    ExplicitSolution s;
    s.m = m;
    s.lambda = lambda;
    // log((2m)!) / (2m) via lgamma
    s.c = 2.0 * m * (std::log(2.0) + std::lgamma(2.0 * m + 1.0) / (2.0 * m) + std::log(lambda));
    return s;
}

double eval_explicit(const ExplicitSolution& sol, double r) {
    if (r < 0.0) throw DomainError("eval_explicit: r must be >= 0");
    const double x = sol.lambda * r;
    return sol.c - 2.0 * sol.m * std::log1p(x * x);
}

Jet explicit_jet(const ExplicitSolution& sol, double r, std::size_t order) {
    if (r < 0.0) throw DomainError("explicit_jet: r must be >= 0");
    const Jet x = Jet::variable(r, order);
    const double l2 = sol.lambda * sol.lambda;
    Jet u = sol.c - 2.0 * sol.m * log(1.0 + l2 * (x * x));
    return u;
}

double explicit_series_coefficient(const ExplicitSolution& sol, int j) {
    const double sign = j % 2 == 0 ? 1.0 : -1.0;
    return 2.0 * sol.m * sign * std::pow(sol.lambda, 2.0 * j) / j;
}

namespace {

// Delta^k r^{2j} = prod_{i=0}^{k-1} (2j-2i)(2j-2i+n-2) r^{2j-2k}
double laplacian_power_factor(int j, int k, int n) {
    double f = 1.0;
    for (int i = 0; i < k; ++i) f *= (2.0 * j - 2.0 * i) * (2.0 * j - 2.0 * i + n - 2.0);
    return f;
}

}  // namespace

InitialConditions explicit_initial_values(int m, double lambda) {
    if (m < 2) throw DomainError("explicit_initial_values: m must be >= 2");
    const auto sol = ExplicitSolution::make(m, lambda);
    InitialConditions ic;
    ic.alpha.push_back(sol.c);
    for (int k = 1; k < m; ++k) ic.alpha.push_back(explicit_series_coefficient(sol, k) * laplacian_power_factor(k, k, sol.n()));
    return ic;
}

RadialState explicit_state(const ExplicitSolution& sol, double r) {
    if (!(r > 0.0)) throw DomainError("explicit_state: r must be positive");
    const int m = sol.m;
    const int n = sol.n();
    RadialState s;
    s.r = r;
    s.w.assign(static_cast<std::size_t>(m), 0.0);
    s.dw.assign(static_cast<std::size_t>(m), 0.0);
    const double x = sol.lambda * r;
    if (x < 0.5) {
        // term-wise on the even series; terms decay like 4^{-j}
        for (int k = 0; k < m; ++k) {
            double w = k == 0 ? sol.c : 0.0;
            double dw = 0.0;
            for (int j = std::max(k, 1); j < k + 80; ++j) {
                const double a = explicit_series_coefficient(sol, j) * laplacian_power_factor(j, k, n);
                const int p = 2 * j - 2 * k;
                w += a * std::pow(r, p);
                if (p > 0) dw += a * p * std::pow(r, p - 1);
            }
            s.w[static_cast<std::size_t>(k)] = w;
            s.dw[static_cast<std::size_t>(k)] = dw;
        }
        return s;
    }
    Jet v = explicit_jet(sol, r, static_cast<std::size_t>(2 * m - 1));
    for (int k = 0; k < m; ++k) {
        s.w[static_cast<std::size_t>(k)] = v.value();
        s.dw[static_cast<std::size_t>(k)] = v.derivative(1);
        if (k + 1 < m) v = radial_laplacian(v, r, n);
    }
    return s;
}

double explicit_residual(const ExplicitSolution& sol, const std::vector<double>& r_samples) {
    double worst = 0.0;
    const double sign = sol.m % 2 == 0 ? 1.0 : -1.0;
    for (double r : r_samples) {
        if (!(r > 0.0)) throw DomainError("explicit_residual: radii must be positive");
        Jet v = explicit_jet(sol, r, static_cast<std::size_t>(2 * sol.m));
        for (int k = 0; k < sol.m; ++k) v = radial_laplacian(v, r, sol.n());
        const double eu = std::exp(eval_explicit(sol, r));
        worst = std::max(worst, std::abs(sign * v.value() - eu) / eu);
    }
    return worst;
}

double explicit_mass(const ExplicitSolution& sol) {
    const double hi = 1e8 / sol.lambda;
    const auto rule = composite_rule_from_origin(hi, 400, 32, 1e-10);
    const int n = sol.n();
    const double body = integrate(rule, [&](double r) { return std::exp(eval_explicit(sol, r)) * std::pow(r, n - 1); });
    // e^u r^{n-1} ~ e^c lambda^{-4m} r^{-2m-1} beyond hi
    const double tail = std::exp(sol.c) * std::pow(sol.lambda, -4.0 * sol.m) * std::pow(hi, -2.0 * sol.m) / (2.0 * sol.m);
    return unit_sphere_area(n) * (body + tail);
}

Trajectory explicit_trajectory(const ExplicitSolution& sol, const IntegratorConfig& config) {
    config.validate();
    Trajectory t;
    t.problem = ProblemSpec::make(sol.m, sol.n());
    t.ic.alpha.push_back(sol.c);
    for (int k = 1; k < sol.m; ++k)
        t.ic.alpha.push_back(explicit_series_coefficient(sol, k) * laplacian_power_factor(k, k, sol.n()));
    t.config = config;
    for (int i = 0;; ++i) {
        double r = config.r0 * std::pow(10.0, static_cast<double>(i) / config.points_per_decade);
        const bool last = r >= config.r_max * (1.0 - 1e-12);
        if (last) r = config.r_max;
        t.samples.push_back(explicit_state(sol, r));
        if (last) break;
    }
    t.terminal_event = TerminalEvent::ReachedHorizon;
    t.r_event = config.r_max;
    return t;
}

}  // namespace gelfand
