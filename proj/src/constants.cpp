#include "gelfand/constants.hpp"

#include <cmath>
#include <limits>

#include "gelfand/errors.hpp"

namespace gelfand {

namespace {

// Exact integer product while it fits, long double afterwards.
class ExactProduct {
public:
    void times(long long f) {
        if (exact_) {
            __int128 next = 0;
            if (__builtin_mul_overflow(value_, static_cast<__int128>(f), &next) ||
                next > kLimit || next < -kLimit) {
                exact_ = false;
                approx_ = static_cast<long double>(value_) * static_cast<long double>(f);
            } else {
                value_ = next;
            }
        } else {
            approx_ *= static_cast<long double>(f);
        }
    }
    void times_square(long long f) {
        times(f);
        times(f);
    }
    [[nodiscard]] double scaled(int power_of_two) const {
        const long double v = exact_ ? static_cast<long double>(value_) : approx_;
        return static_cast<double>(std::ldexp(v, power_of_two));
    }

private:
    static constexpr __int128 kLimit = static_cast<__int128>(1) << 120;
    __int128 value_ = 1;
    long double approx_ = 1.0L;
    bool exact_ = true;
};

double sq(double x) { return x * x; }

}  // namespace

double A_const(int n, int k) {
    if (k < 0) throw DomainError("A_const: k must be >= 0");
    ExactProduct p;
    for (int i = 0; i < k; ++i) {
        p.times_square(n - 4 * k + 4 * i);
        p.times_square(n + 4 * k - 4 * i - 4);
    }
    return p.scaled(-4 * k);
}

double B_const(int n, int k) {
    if (k < 0) throw DomainError("B_const: k must be >= 0");
    ExactProduct p;
    p.times_square(n - 2);
    for (int i = 1; i <= k; ++i) {
        p.times_square(n - 4 * i - 2);
        p.times_square(n + 4 * i - 2);
    }
    return p.scaled(-4 * k - 2);
}

double hr_gamma(int n, double alpha) { return sq((n - 2) / 2.0) - sq((alpha - 2.0) / 2.0); }

double hr_gamma_bar(int n, double alpha) { return sq((n - 2) / 2.0) + sq((alpha - 2.0) / 2.0); }

MuValue hr_mu(int n, double alpha) {
    if (n < 2) throw DomainError("mu: n must be >= 2");
    const double g = hr_gamma(n, alpha);
    // j -> g + j(n-2+j) is increasing, so |.| decreases until the sign change
    const auto term = [&](int j) { return sq(g + static_cast<double>(j) * (n - 2 + j)); };
    int j = 0;
    double best = term(0);
    for (;;) {
        const double next = term(j + 1);
        if (!(next < best)) break;
        best = next;
        ++j;
    }
    return {best, j};
}

HRProduct hr_product(int n, int k, HRVariant variant) {
    if (n < 2) throw DomainError("hr_product: n must be >= 2");
    if (k < (variant == HRVariant::Laplacian ? 1 : 0)) throw DomainError("hr_product: k out of range");
    double prod = 1.0;
    for (int i = 1; i <= k; ++i) prod *= hr_mu(n, -4.0 * k + 4.0 * i).value;
    if (variant == HRVariant::Gradient) prod *= sq((n - 2) / 2.0);
    if (prod != 0.0) return {prod, false};
    return {variant == HRVariant::Laplacian ? hr_log_laplacian_constant(n, k) : hr_log_gradient_constant(n, k),
            true};
}

double hr_log_laplacian_constant(int n, int k) {
    double c = std::ldexp(1.0, k);
    for (int i = 0; i < k; ++i) c *= hr_gamma_bar(n, -4.0 * i) * sq((2 * i + 1) / 2.0);
    return c;
}

double hr_log_gradient_constant(int n, int k) {
    double c = std::ldexp(1.0, k - 2);
    for (int i = 0; i < k; ++i) c *= hr_gamma_bar(n, -4.0 * i - 2.0) * sq((2 * i + 3) / 2.0);
    return c;
}

double oned_constant(int k) {
    if (k < 0) throw DomainError("oned_constant: k must be >= 0");
    if (k == 0) return 0.0;
    ExactProduct p;
    for (int i = 0; i < k; ++i) {
        p.times_square(4 * i - 3);
        p.times_square(4 * i - 5);
    }
    return p.scaled(-4 * k - 2);
}

double lambda_S(int m, int n) {
    if (m < 1) throw DomainError("lambda_S: m must be >= 1");
    ExactProduct p;
    for (int k = 1; k <= m; ++k) p.times(2LL * k * (n - 2 * k));
    return p.scaled(0);
}

SupersolutionConstants supersolution_constants(int m, int n) {
    if (m < 2 || m % 2 != 0) throw DomainError("supersolution constants need m even >= 2");
    if (n == 3) throw DomainError("supersolution constants: the n = 3 variant is not implemented");
    if (n < 4) throw DomainError("supersolution constants need n >= 4");
    ExactProduct p;
    for (int j = 1; j <= m; ++j) p.times(2 * j - 3);
    for (int j = 0; j < m; ++j) p.times(n + 2 * j - 3);
    SupersolutionConstants s;
    s.C = 1.0 / p.scaled(0);
    // d/dr [ |C| r^{2m-3} - 3 log r ] = 0  <=>  (2m-3) |C| r^{2m-3} = 3
    const double e = 2.0 * m - 3.0;
    s.r_min = std::pow(3.0 / (e * std::abs(s.C)), 1.0 / e);
    s.lambda = std::exp(3.0 / e) / (s.r_min * s.r_min * s.r_min);
    return s;
}

}  // namespace gelfand
