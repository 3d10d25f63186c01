#pragma once

// Dormand-Prince 5(4) embedded Runge-Kutta pair with the standard
// fourth-order continuous extension (Hairer, Norsett & Wanner, "Solving ODEs I",
// routine DOPRI5).

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gelfand {

/// y' = f(t, y). Returns false when f cannot be evaluated (exp overflow, NaN);
/// the stepper treats that as a failed trial step.
using OdeRhs = std::function<bool(double t, std::span<const double> y, std::span<double> dydt)>;

class DormandPrince5 {
public:
    DormandPrince5(OdeRhs f, std::size_t dim, double rtol, double atol);

    /// Start from (t, y) with initial trial step h. Throws NumericalError if f
    /// cannot be evaluated at the start.
    void reset(double t, std::span<const double> y, double h);

    /// Advance by one accepted step without passing t_limit (> t()).
    /// Throws NumericalError on step-size underflow.
    void step(double t_limit);

    [[nodiscard]] double t() const noexcept { return t_; }
    [[nodiscard]] std::span<const double> y() const noexcept { return y_; }
    [[nodiscard]] std::span<const double> dydt() const noexcept { return k_[6]; }
    [[nodiscard]] double t_prev() const noexcept { return t_prev_; }
    [[nodiscard]] std::span<const double> y_prev() const noexcept { return y_prev_; }

    /// Dense output at t in [t_prev(), t()].
    void interpolate(double t, std::span<double> out) const;

    /// One unchecked step of size h from (t_prev(), y_prev()). Used to put a
    /// state exactly on a located event. Returns false if f failed.
    bool step_from_previous(double h, std::vector<double>& out) const;

    [[nodiscard]] std::size_t accepted_steps() const noexcept { return accepted_; }
    [[nodiscard]] std::size_t rejected_steps() const noexcept { return rejected_; }
    [[nodiscard]] std::size_t evaluations() const noexcept { return evaluations_; }

private:
    bool attempt(double h, double& err_norm);

    OdeRhs f_;
    std::size_t dim_;
    double rtol_;
    double atol_;

    double t_ = 0.0;
    double h_ = 0.0;
    double t_prev_ = 0.0;
    std::vector<double> y_;
    std::vector<double> y_prev_;
    std::vector<double> y_trial_;
    std::vector<double> tmp_;
    // stages of the last accepted step; k_[0] = f(t_prev, y_prev), k_[6] = f(t, y)
    std::array<std::vector<double>, 7> k_;
    std::array<std::vector<double>, 7> trial_k_;
    std::vector<double> dense_[5];

    std::size_t accepted_ = 0;
    std::size_t rejected_ = 0;
    mutable std::size_t evaluations_ = 0;
};

}  // namespace gelfand
