#pragma once

// Truncated Taylor series ("jets") with the usual recurrences for products,
// quotients, exp and log. A jet of order K stores c_0..c_K with
// f(x0 + e) = sum_i c_i e^i + O(e^{K+1}), so the i-th derivative is i! * c_i.

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace gelfand {

class Jet {
public:
    Jet() : c_(1, 0.0) {}

    /// Constant jet of the given order.
    Jet(double value, std::size_t order) : c_(order + 1, 0.0) { c_[0] = value; }

    /// The independent variable x0 + e.
    static Jet variable(double x0, std::size_t order) {
        Jet j(x0, order);
        if (order >= 1) j.c_[1] = 1.0;
        return j;
    }

    static Jet from_coefficients(std::vector<double> c) {
        Jet j;
        j.c_ = std::move(c);
        if (j.c_.empty()) j.c_.push_back(0.0);
        return j;
    }

    [[nodiscard]] std::size_t order() const noexcept { return c_.size() - 1; }
    [[nodiscard]] double value() const noexcept { return c_[0]; }
    [[nodiscard]] double coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0.0; }
    [[nodiscard]] const std::vector<double>& coefficients() const noexcept { return c_; }

    /// i-th derivative at the expansion point.
    [[nodiscard]] double derivative(std::size_t i) const noexcept {
        double f = 1.0;
        for (std::size_t k = 2; k <= i; ++k) f *= static_cast<double>(k);
        return coeff(i) * f;
    }

    /// Jet of f' (one order lower).
    [[nodiscard]] Jet differentiate() const {
        if (order() == 0) return Jet(0.0, 0);
        std::vector<double> d(order());
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<double>(i + 1) * c_[i + 1];
        return from_coefficients(std::move(d));
    }

    [[nodiscard]] Jet truncated(std::size_t order) const {
        std::vector<double> c(order + 1, 0.0);
        for (std::size_t i = 0; i <= order && i < c_.size(); ++i) c[i] = c_[i];
        return from_coefficients(std::move(c));
    }

    [[nodiscard]] bool is_finite() const noexcept {
        return std::all_of(c_.begin(), c_.end(), [](double v) { return std::isfinite(v); });
    }

    Jet& operator+=(const Jet& o) {
        harmonize(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.coeff(i);
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        harmonize(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.coeff(i);
        return *this;
    }
    Jet& operator*=(double s) {
        for (double& v : c_) v *= s;
        return *this;
    }
    Jet& operator+=(double s) {
        c_[0] += s;
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, double s) { return a *= s; }
    friend Jet operator*(double s, Jet a) { return a *= s; }
    friend Jet operator+(Jet a, double s) { return a += s; }
    friend Jet operator+(double s, Jet a) { return a += s; }
    friend Jet operator-(Jet a, double s) { return a += -s; }
    friend Jet operator-(double s, const Jet& a) { return (-1.0 * a) + s; }
    friend Jet operator-(const Jet& a) { return -1.0 * a; }

    friend Jet operator*(const Jet& a, const Jet& b) {
        const std::size_t k = std::min(a.order(), b.order());
        std::vector<double> c(k + 1, 0.0);
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = 0; j <= i; ++j) c[i] += a.c_[j] * b.c_[i - j];
        return from_coefficients(std::move(c));
    }

    friend Jet operator/(const Jet& a, const Jet& b) {
        const std::size_t k = std::min(a.order(), b.order());
        std::vector<double> q(k + 1, 0.0);
        for (std::size_t i = 0; i <= k; ++i) {
            double s = a.c_[i];
            for (std::size_t j = 1; j <= i; ++j) s -= b.c_[j] * q[i - j];
            q[i] = s / b.c_[0];
        }
        return from_coefficients(std::move(q));
    }

    friend Jet exp(const Jet& a) {
        const std::size_t k = a.order();
        std::vector<double> e(k + 1, 0.0);
        e[0] = std::exp(a.c_[0]);
        for (std::size_t i = 1; i <= k; ++i) {
            double s = 0.0;
            for (std::size_t j = 1; j <= i; ++j) s += static_cast<double>(j) * a.c_[j] * e[i - j];
            e[i] = s / static_cast<double>(i);
        }
        return from_coefficients(std::move(e));
    }

    friend Jet log(const Jet& a) {
        const std::size_t k = a.order();
        std::vector<double> l(k + 1, 0.0);
        l[0] = std::log(a.c_[0]);
        for (std::size_t i = 1; i <= k; ++i) {
            double s = 0.0;
            for (std::size_t j = 1; j < i; ++j) s += static_cast<double>(j) * l[j] * a.c_[i - j];
            l[i] = (a.c_[i] - s / static_cast<double>(i)) / a.c_[0];
        }
        return from_coefficients(std::move(l));
    }

private:
    void harmonize(const Jet& o) {
        if (o.c_.size() < c_.size()) c_.resize(o.c_.size());
    }

    std::vector<double> c_;
};

/// Radial Laplacian v'' + (n-1)/r v' of a jet expanded at r0 > 0, in
/// dimension n. The result has order two less than the input.
inline Jet radial_laplacian(const Jet& v, double r0, int n) {
    assert(v.order() >= 2);
    const Jet d1 = v.differentiate();
    const Jet d2 = d1.differentiate();
    const Jet r = Jet::variable(r0, d2.order());
    return d2 + static_cast<double>(n - 1) * (d1.truncated(d2.order()) / r);
}

}  // namespace gelfand
