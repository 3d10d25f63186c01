#pragma once

// Radial Cauchy problem for (-Delta)^m u = e^u in R^n:
//   u(0) = alpha_0, Delta^k u(0) = alpha_k, (Delta^k u)'(0) = 0.
// Written as a first-order system in w_k = Delta^k u and w_k', with
//   w_k'' = w_{k+1} - (n-1)/r w_k'          (k < m-1)
//   w_{m-1}'' = s_m e^{w_0} - (n-1)/r w_{m-1}'   s_m = (-1)^m.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gelfand/errors.hpp"

namespace gelfand {

struct ProblemSpec {
    int m = 1;  // order of the operator is 2m
    int n = 1;  // space dimension

    /// Validating constructor: m >= 1, n >= 1.
    static ProblemSpec make(int m, int n);

    /// s_m = (-1)^m, the sign in front of e^u once (-Delta)^m is expanded.
    [[nodiscard]] int sign() const noexcept { return m % 2 == 0 ? 1 : -1; }
    [[nodiscard]] bool m_even() const noexcept { return m % 2 == 0; }
    /// w_{m-1} >= 0 certifies blow-up only for m even and n >= 3.
    [[nodiscard]] bool flux_event_armed() const noexcept { return m_even() && n >= 3; }

    friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// alpha_k = Delta^k u(0), k = 0..m-1.
struct InitialConditions {
    std::vector<double> alpha;

    /// Throws DomainError unless there are exactly m finite entries.
    void validate(const ProblemSpec& problem) const;
};

struct RadialState {
    double r = 0.0;
    std::vector<double> w;   // w_k = Delta^k u(r)
    std::vector<double> dw;  // w_k'(r)
};

struct IntegratorConfig {
    double rtol = 1e-10;
    double atol = 1e-12;
    double r0 = 1e-6;         // singular-start offset
    double r_max = 1e4;       // horizon
    double u_overflow = 50.0; // cap on w_0
    int points_per_decade = 400;

    /// Throws DomainError on an inconsistent configuration.
    void validate() const;
};

enum class TerminalEvent {
    ReachedHorizon,
    OverflowGuard,
    FluxSignEvent,
    Failure,  // only on the partial trajectory carried by IntegrationFailure
};

std::string to_string(TerminalEvent e);
TerminalEvent terminal_event_from_string(const std::string& s);

struct IntegrationStats {
    std::size_t accepted_steps = 0;
    std::size_t rejected_steps = 0;
    std::size_t evaluations = 0;
};

/// Output of integrate(). Samples lie on the log-spaced grid
/// r0 * 10^{i/points_per_decade}; the last sample is the terminal state.
struct Trajectory {
    ProblemSpec problem;
    InitialConditions ic;
    IntegratorConfig config;
    std::vector<RadialState> samples;
    TerminalEvent terminal_event = TerminalEvent::ReachedHorizon;
    double r_event = 0.0;  // radius of the terminal state
    IntegrationStats stats;

    [[nodiscard]] const RadialState& terminal() const { return samples.back(); }
};

/// Thrown by integrate() on step-size underflow or an unrecoverable
/// non-finite state; carries everything computed up to the last valid state.
class IntegrationFailure : public NumericalError {
public:
    IntegrationFailure(const std::string& what, Trajectory partial)
        : NumericalError(what), partial_(std::move(partial)) {}
    [[nodiscard]] const Trajectory& partial() const noexcept { return partial_; }

private:
    Trajectory partial_;
};

/// Derivative of the packed state (w_0..w_{m-1}, w'_0..w'_{m-1}).
/// Throws DomainError for r <= 0 and NumericalError when e^{w_0} overflows.
std::vector<double> rhs(const ProblemSpec& problem, const RadialState& state);

/// Second-order Taylor state at r0 > 0:
///   w_k(r0) = alpha_k + f_k r0^2 / (2n),  w_k'(r0) = f_k r0 / n,
/// with f_k = alpha_{k+1} (k < m-1) and f_{m-1} = s_m e^{alpha_0}.
RadialState taylor_start(const ProblemSpec& problem, const InitialConditions& ic, double r0);

/// Adaptive Dormand-Prince integration from taylor_start(r0) to the first of
/// r_max, w_0 > u_overflow, or (m even, n >= 3) w_{m-1} >= 0.
Trajectory integrate(const ProblemSpec& problem, const InitialConditions& ic,
                     const IntegratorConfig& config = {});

/// Cubic Hermite interpolation of w_0 from the samples (w_0, w_0'); r must
/// lie within the sampled range.
double interpolate_u(const Trajectory& trajectory, double r);

/// One-dimensional, not necessarily symmetric, solutions of
/// (-1)^m u^{(2m)} = e^u with u^{(k)}(0) given for k = 0..2m-1.
struct LineTrajectory {
    int m = 1;
    int direction = 1;  // +1 integrates toward +x, -1 toward -x
    std::vector<double> x;
    std::vector<double> u;
    TerminalEvent terminal_event = TerminalEvent::ReachedHorizon;
    double x_end = 0.0;
};

LineTrajectory integrate_line(int m, const std::vector<double>& derivatives_at_zero,
                              double x_max, int direction, const IntegratorConfig& config = {},
                              std::size_t samples = 1001);

}  // namespace gelfand
