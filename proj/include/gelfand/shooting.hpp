#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gelfand/radial_ode.hpp"

namespace gelfand {

enum class OutcomeTag { GlobalToHorizon, BlowUp, Inconclusive };

std::string to_string(OutcomeTag t);

struct Outcome {
    OutcomeTag tag = OutcomeTag::Inconclusive;
    TerminalEvent source = TerminalEvent::ReachedHorizon;
    double r_event = 0.0;  // certificate radius for BlowUp
    RadialState tail;
};

/// FluxSignEvent or OverflowGuard -> BlowUp; ReachedHorizon with (m even =>
/// w_{m-1} < 0 at the horizon) -> GlobalToHorizon; anything else Inconclusive.
Outcome classify(const Trajectory& trajectory);

/// Integrates and classifies; an IntegrationFailure becomes Inconclusive.
Outcome classify_ic(const ProblemSpec& problem, const InitialConditions& ic, const IntegratorConfig& config);

struct ShootingResult {
    ProblemSpec problem;
    double alpha = 0.0;
    std::vector<double> beta_prime;  // beta_1 .. beta_{m-2}
    double phi_estimate = 0.0;
    double b_global = 0.0;
    double b_blowup = 0.0;
    std::size_t evaluations = 0;
    double tolerance_achieved = 0.0;
    std::vector<std::string> warnings;
};

/// Bisection in beta_{m-1} for the boundary Phi_alpha(beta') of the set of
/// global initial data. m even, n >= 3. The blow-up side is certified; the
/// global side only up to the integration horizon.
ShootingResult phi_alpha(const ProblemSpec& problem, double alpha, const std::vector<double>& beta_prime,
                         double tol = 1e-6, const IntegratorConfig& config = {});

/// Phi_alpha along beta' = t e_axis (axis counted from 1). m >= 4 even.
/// Grid points are independent and evaluated on `workers` threads.
std::vector<std::pair<double, double>> scan_phi_monotonicity(const ProblemSpec& problem, double alpha, int axis,
                                                             const std::vector<double>& grid, double tol = 1e-6,
                                                             const IntegratorConfig& config = {},
                                                             unsigned workers = 1);

struct ComparisonViolation {
    double r = 0.0;
    int component = 0;  // index into (w_0..w_{m-1}, w'_0..w'_{m-1})
    double gap = 0.0;   // u-component minus v-component
};

struct ComparisonReport {
    bool holds = true;
    std::optional<ComparisonViolation> first_violation;
    std::size_t compared_samples = 0;
    double min_gap = 0.0;
};

/// Integrates both problems and checks every component of u >= v at the
/// radii both trajectories sampled, with slack -10 rtol max(1, |u|, |v|).
ComparisonReport comparison_check(const ProblemSpec& problem, const InitialConditions& ic_u,
                                  const InitialConditions& ic_v, const IntegratorConfig& config = {});

ComparisonReport compare_trajectories(const Trajectory& u, const Trajectory& v);

}  // namespace gelfand
