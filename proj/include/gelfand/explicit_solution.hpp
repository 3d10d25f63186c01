#pragma once

// The n = 2m family u(r) = c - 2m log(1 + lambda^2 r^2),
// c = 2m log(2 ((2m)!)^{1/(2m)} lambda), solving (-Delta)^m u = e^u on R^{2m}.

#include <vector>

#include "gelfand/jet.hpp"
#include "gelfand/radial_ode.hpp"

namespace gelfand {

struct ExplicitSolution {
    int m = 1;
    double lambda = 1.0;
    double c = 0.0;

    /// m >= 1, lambda > 0.
    static ExplicitSolution make(int m, double lambda);
    [[nodiscard]] int n() const noexcept { return 2 * m; }
};

double eval_explicit(const ExplicitSolution& sol, double r);

/// Jet of u at r (r >= 0) of the given order; derivative(i) is u^{(i)}(r).
Jet explicit_jet(const ExplicitSolution& sol, double r, std::size_t order);

/// Coefficients a_j of u = c + sum_{j>=1} a_j r^{2j}: a_j = 2m (-1)^j lambda^{2j} / j.
double explicit_series_coefficient(const ExplicitSolution& sol, int j);

/// (alpha_0, beta_1, .., beta_{m-1}) with beta_k = Delta^k u(0); m >= 2.
InitialConditions explicit_initial_values(int m, double lambda);

/// Delta^k u and (Delta^k u)' at r for k = 0..m-1 in dimension 2m.
/// Uses the even power series for lambda r < 1/2 and Taylor jets otherwise.
RadialState explicit_state(const ExplicitSolution& sol, double r);

/// max_r |(-1)^m Delta^m u(r) - e^{u(r)}| / e^{u(r)}.
double explicit_residual(const ExplicitSolution& sol, const std::vector<double>& r_samples);

/// omega_{2m-1} int_0^inf e^u r^{2m-1} dr by quadrature.
double explicit_mass(const ExplicitSolution& sol);

/// Samples of the explicit solution on the integrator's log grid, packaged as
/// a trajectory of the (m, 2m) problem ending at config.r_max.
Trajectory explicit_trajectory(const ExplicitSolution& sol, const IntegratorConfig& config = {});

}  // namespace gelfand
