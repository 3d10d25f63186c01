#include "gelfand/dopri5.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "gelfand/errors.hpp"

namespace gelfand {

namespace {

constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                 a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

bool all_finite(std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

DormandPrince5::DormandPrince5(OdeRhs f, std::size_t dim, double rtol, double atol)
    : f_(std::move(f)), dim_(dim), rtol_(rtol), atol_(atol),
      y_(dim), y_prev_(dim), y_trial_(dim), tmp_(dim) {
    for (auto& k : k_) k.assign(dim, 0.0);
    for (auto& k : trial_k_) k.assign(dim, 0.0);
    for (auto& d : dense_) d.assign(dim, 0.0);
}

void DormandPrince5::reset(double t, std::span<const double> y, double h) {
    t_ = t;
    t_prev_ = t;
    h_ = h;
    std::copy(y.begin(), y.end(), y_.begin());
    std::copy(y.begin(), y.end(), y_prev_.begin());
    ++evaluations_;
    if (!f_(t_, y_, k_[6]) || !all_finite(k_[6]))
        throw NumericalError("right-hand side not finite at the initial state");
    k_[0] = k_[6];
    for (std::size_t i = 0; i < dim_; ++i) {
        dense_[0][i] = y_[i];
        dense_[1][i] = dense_[2][i] = dense_[3][i] = dense_[4][i] = 0.0;
    }
}

bool DormandPrince5::attempt(double h, double& err_norm) {
    auto& k = trial_k_;
    k[0] = k_[6];
    const auto stage = [&](double c, auto combine, std::vector<double>& out) {
        for (std::size_t i = 0; i < dim_; ++i) tmp_[i] = y_[i] + h * combine(i);
        ++evaluations_;
        return all_finite(tmp_) && f_(t_ + c * h, tmp_, out) && all_finite(out);
    };
    if (!stage(c2, [&](std::size_t i) { return a21 * k[0][i]; }, k[1])) return false;
    if (!stage(c3, [&](std::size_t i) { return a31 * k[0][i] + a32 * k[1][i]; }, k[2])) return false;
    if (!stage(c4, [&](std::size_t i) { return a41 * k[0][i] + a42 * k[1][i] + a43 * k[2][i]; }, k[3]))
        return false;
    if (!stage(c5,
               [&](std::size_t i) {
                   return a51 * k[0][i] + a52 * k[1][i] + a53 * k[2][i] + a54 * k[3][i];
               },
               k[4]))
        return false;
    if (!stage(1.0,
               [&](std::size_t i) {
                   return a61 * k[0][i] + a62 * k[1][i] + a63 * k[2][i] + a64 * k[3][i] +
                          a65 * k[4][i];
               },
               k[5]))
        return false;
    for (std::size_t i = 0; i < dim_; ++i)
        y_trial_[i] = y_[i] + h * (a71 * k[0][i] + a73 * k[2][i] + a74 * k[3][i] + a75 * k[4][i] +
                                   a76 * k[5][i]);
    ++evaluations_;
    if (!all_finite(y_trial_) || !f_(t_ + h, y_trial_, k[6]) || !all_finite(k[6])) return false;

    double sum = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        const double err = h * (e1 * k[0][i] + e3 * k[2][i] + e4 * k[3][i] + e5 * k[4][i] +
                                e6 * k[5][i] + e7 * k[6][i]);
        const double scale = atol_ + rtol_ * std::max(std::abs(y_[i]), std::abs(y_trial_[i]));
        sum += (err / scale) * (err / scale);
    }
    err_norm = std::sqrt(sum / static_cast<double>(dim_));
    return std::isfinite(err_norm);
}

void DormandPrince5::step(double t_limit) {
    const double span = t_limit - t_;
    double h = std::min(h_, span);
    const double h_min = 16.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(t_), 1e-300);
    for (;;) {
        if (h < h_min && h < span)
            throw NumericalError("step size underflow at t = " + std::to_string(t_));
        double err = 0.0;
        if (!attempt(h, err)) {
            ++rejected_;
            h *= 0.25;
            continue;
        }
        if (err <= 1.0) {
            const double fac = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
            // a step clipped to land on t_limit says nothing about larger steps
            h_ = (h == span) ? std::min(h_, h * fac) : h * fac;
            break;
        }
        ++rejected_;
        h *= std::clamp(0.9 * std::pow(err, -0.2), 0.2, 1.0);
    }

    const double t_new = (h == span) ? t_limit : t_ + h;
    t_prev_ = t_;
    std::swap(y_prev_, y_);
    std::swap(y_, y_trial_);
    std::swap(k_, trial_k_);
    t_ = t_new;
    ++accepted_;

    for (std::size_t i = 0; i < dim_; ++i) {
        const double ydiff = y_[i] - y_prev_[i];
        const double bspl = h * k_[0][i] - ydiff;
        dense_[0][i] = y_prev_[i];
        dense_[1][i] = ydiff;
        dense_[2][i] = bspl;
        dense_[3][i] = ydiff - h * k_[6][i] - bspl;
        dense_[4][i] = h * (d1 * k_[0][i] + d3 * k_[2][i] + d4 * k_[3][i] + d5 * k_[4][i] +
                            d6 * k_[5][i] + d7 * k_[6][i]);
    }
}

void DormandPrince5::interpolate(double t, std::span<double> out) const {
    const double h = t_ - t_prev_;
    const double theta = h == 0.0 ? 1.0 : (t - t_prev_) / h;
    const double theta1 = 1.0 - theta;
    for (std::size_t i = 0; i < dim_; ++i)
        out[i] = dense_[0][i] +
                 theta * (dense_[1][i] +
                          theta1 * (dense_[2][i] + theta * (dense_[3][i] + theta1 * dense_[4][i])));
}

bool DormandPrince5::step_from_previous(double h, std::vector<double>& out) const {
    std::array<std::vector<double>, 6> k;
    for (auto& v : k) v.assign(dim_, 0.0);
    std::vector<double> tmp(dim_);
    k[0] = k_[0];
    const double t0 = t_prev_;
    const auto& y0 = y_prev_;
    const auto stage = [&](double c, auto combine, std::vector<double>& dst) {
        for (std::size_t i = 0; i < dim_; ++i) tmp[i] = y0[i] + h * combine(i);
        ++evaluations_;
        return all_finite(tmp) && f_(t0 + c * h, tmp, dst) && all_finite(dst);
    };
    if (!stage(c2, [&](std::size_t i) { return a21 * k[0][i]; }, k[1])) return false;
    if (!stage(c3, [&](std::size_t i) { return a31 * k[0][i] + a32 * k[1][i]; }, k[2])) return false;
    if (!stage(c4, [&](std::size_t i) { return a41 * k[0][i] + a42 * k[1][i] + a43 * k[2][i]; }, k[3]))
        return false;
    if (!stage(c5,
               [&](std::size_t i) {
                   return a51 * k[0][i] + a52 * k[1][i] + a53 * k[2][i] + a54 * k[3][i];
               },
               k[4]))
        return false;
    if (!stage(1.0,
               [&](std::size_t i) {
                   return a61 * k[0][i] + a62 * k[1][i] + a63 * k[2][i] + a64 * k[3][i] +
                          a65 * k[4][i];
               },
               k[5]))
        return false;
    out.resize(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        out[i] = y0[i] + h * (a71 * k[0][i] + a73 * k[2][i] + a74 * k[3][i] + a75 * k[4][i] +
                              a76 * k[5][i]);
    return all_finite(out);
}

}  // namespace gelfand
