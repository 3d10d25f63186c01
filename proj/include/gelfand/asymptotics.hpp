#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gelfand/radial_ode.hpp"

namespace gelfand {

struct EllEstimate {
    double ell = 0.0;
    double uncertainty = 0.0;  // max - min over the window
};

/// Tail mean of w_{m-1} over the last decade of r. Needs >= 2 decades of samples.
EllEstimate estimate_ell(const Trajectory& trajectory);

/// Equal-weight (in log r) least squares for w_0(r) ~ c r^p over the last decade.
double fit_leading_coefficient(const Trajectory& trajectory, double p);

/// ell / (2^{m-1} (m-1)! prod_{l=1}^{m-1} (n+2l-2)): the coefficient of
/// r^{2m-2} whose iterated Laplacian is ell.
double predicted_leading_coefficient(int m, int n, double ell);

/// -d w_0 / d log r, least-squares slope over the last decade.
double tail_log_slope(const Trajectory& trajectory);

struct PowerBound {
    double C = 0.0;
    bool holds = false;
};

/// Largest C >= 0 with w_0(r) < -C r^K on the last `decades` of samples.
PowerBound power_bound_check(const Trajectory& trajectory, int K, double decades = 1.0);

struct EmdenSamples {
    double lambda_S = 0.0;
    int m = 0;
    std::vector<double> s;  // log r
    std::vector<double> w;  // u(e^s) + 2m s - log lambda_S
};

/// Needs n > 2m.
EmdenSamples emden_transform(const Trajectory& trajectory);
EmdenSamples emden_transform(const ProblemSpec& problem, const std::vector<double>& r, const std::vector<double>& u);

struct EmdenResidual {
    double max_residual = 0.0;
    double h = 0.0;
    std::size_t points = 0;
};

/// Resamples w on a uniform s-grid of step h (monotone cubic), differentiates
/// with fourth-order central stencils and returns
/// max |Q_m(d/ds) w - lambda_S (e^w - 1)| over the interior nodes.
/// h <= 0 keeps the input spacing, which must then be uniform.
EmdenResidual emden_residual(const EmdenSamples& samples, const ProblemSpec& problem, double h = 0.0);

enum class Regime { PowerGrowthDown, LogDecay, PowerBound, Undetermined };
std::string to_string(Regime r);

struct AsymptoticReport {
    EllEstimate ell;
    bool has_ell = false;
    double fitted_leading_coeff = 0.0;
    double predicted_coeff = 0.0;
    double log_slope = 0.0;
    Regime regime = Regime::Undetermined;
    int regime_order = 0;  // 2m-2 for PowerGrowthDown, K for PowerBound, 2m for LogDecay
    std::vector<std::string> notes;
};

AsymptoticReport analyze(const Trajectory& trajectory);

}  // namespace gelfand
