#include "gelfand/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gelfand/constants.hpp"
#include "gelfand/errors.hpp"

namespace gelfand {

namespace {

using cld = std::complex<long double>;

constexpr __int128 kCoeffLimit = static_cast<__int128>(1) << 100;

// Horner for p and p' at z.
void horner(const std::vector<long double>& c, cld z, cld& p, cld& dp) {
    p = c.back();
    dp = 0.0L;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
}

}  // namespace

std::vector<__int128> Qm_coefficients_exact(int m, int n) {
    if (m < 1 || n < 1) throw DomainError("Q_m needs m >= 1 and n >= 1");
    std::vector<__int128> c{1};
    const auto multiply = [&c](long long root) {  // c <- c * (t - root)
        std::vector<__int128> next(c.size() + 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= c[i] * root;
        }
        for (auto v : next)
            if (v > kCoeffLimit || v < -kCoeffLimit) throw NumericalError("Q_m coefficients overflow");
        c = std::move(next);
    };
    for (int j = 0; j < m; ++j) {
        multiply(2LL * j);
        multiply(-(static_cast<long long>(n) - 2LL * j - 2LL));
    }
    if (m % 2 != 0)
        for (auto& v : c) v = -v;
    return c;
}

std::vector<double> Qm_coefficients(int m, int n) {
    const auto exact = Qm_coefficients_exact(m, n);
    std::vector<double> c;
    c.reserve(exact.size());
    for (auto v : exact) c.push_back(static_cast<double>(v));
    return c;
}

std::vector<double> Pm_coefficients(int m, int n) {
    auto c = Qm_coefficients(m, n);
    c[0] -= lambda_S(m, n);
    return c;
}

double evaluate_polynomial(const std::vector<double>& c, double t) {
    double p = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) p = p * t + c[i];
    return p;
}

std::vector<PolynomialRoot> polynomial_roots(const std::vector<double>& coeffs) {
    std::vector<long double> c(coeffs.begin(), coeffs.end());
    while (c.size() > 1 && c.back() == 0.0L) c.pop_back();
    const std::size_t deg = c.size() - 1;
    if (deg == 0) throw DomainError("polynomial_roots: constant polynomial");

    // initial guesses on a circle of radius given by the Cauchy bound
    long double bound = 0.0L;
    for (std::size_t i = 0; i < deg; ++i) bound = std::max(bound, std::abs(c[i] / c[deg]));
    const long double radius = 1.0L + bound;
    std::vector<cld> z(deg);
    for (std::size_t k = 0; k < deg; ++k) {
        const long double th = 2.0L * std::numbers::pi_v<long double> * (k + 0.25L) / deg + 0.4L;
        z[k] = std::polar(0.5L * radius, th);
    }

    for (int iter = 0; iter < 500; ++iter) {
        long double worst = 0.0L;
        for (std::size_t k = 0; k < deg; ++k) {
            cld p, dp;
            horner(c, z[k], p, dp);
            if (p == cld(0.0L)) continue;
            const cld ratio = p / dp;
            cld sum = 0.0L;
            for (std::size_t j = 0; j < deg; ++j)
                if (j != k) sum += 1.0L / (z[k] - z[j]);
            const cld step = ratio / (1.0L - ratio * sum);
            z[k] -= step;
            worst = std::max(worst, std::abs(step) / (1.0L + std::abs(z[k])));
        }
        if (worst < 1e-18L) break;
    }

    std::vector<PolynomialRoot> roots;
    for (auto zk : z) {
        // Newton polishing; keep the iterate with the smallest residual
        cld best = zk;
        cld p, dp;
        horner(c, best, p, dp);
        long double best_res = std::abs(p);
        cld cur = zk;
        for (int it = 0; it < 5 && dp != cld(0.0L); ++it) {
            cur -= p / dp;
            horner(c, cur, p, dp);
            if (std::abs(p) < best_res) {
                best_res = std::abs(p);
                best = cur;
            }
        }
        long double scale = 0.0L;
        long double power = 1.0L;
        for (std::size_t i = 0; i <= deg; ++i) {
            scale += std::abs(c[i]) * power;
            power *= std::abs(best);
        }
        roots.push_back({std::complex<double>(static_cast<double>(best.real()), static_cast<double>(best.imag())),
                         static_cast<double>(best_res / scale)});
    }
    std::sort(roots.begin(), roots.end(), [](const PolynomialRoot& a, const PolynomialRoot& b) {
        if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
        return a.z.imag() < b.z.imag();
    });
    return roots;
}

std::vector<std::complex<double>> expand_roots(const std::vector<std::complex<double>>& roots, double lead) {
    std::vector<std::complex<double>> c{lead};
    for (const auto& r : roots) {
        std::vector<std::complex<double>> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= c[i] * r;
        }
        c = std::move(next);
    }
    return c;
}

SpectrumReport classify_polynomial(int m, int n, double lambda, std::vector<double> p_coeffs, double tol) {
    SpectrumReport rep;
    rep.m = m;
    rep.n = n;
    rep.lambda_S = lambda;
    rep.tol = tol;
    rep.p_coeffs = std::move(p_coeffs);
    rep.roots = polynomial_roots(rep.p_coeffs);
    for (const auto& r : rep.roots)
        if (std::abs(r.z.imag()) > tol * (1.0 + std::abs(r.z))) rep.has_nonreal = true;

    std::vector<std::complex<double>> zs;
    for (const auto& r : rep.roots) zs.push_back(r.z);
    const auto back = expand_roots(zs, rep.p_coeffs.back());
    double cmax = 0.0;
    for (double v : rep.p_coeffs) cmax = std::max(cmax, std::abs(v));
    for (std::size_t i = 0; i < rep.p_coeffs.size(); ++i)
        rep.roundtrip_error = std::max(rep.roundtrip_error, std::abs(back[i] - rep.p_coeffs[i]) / cmax);
    return rep;
}

SpectrumReport Pm_roots(int m, int n, double tol) {
    if (m < 1) throw DomainError("P_m needs m >= 1");
    if (n <= 2 * m) throw DomainError("P_m roots need n > 2m (lambda_S > 0)");
    auto rep = classify_polynomial(m, n, lambda_S(m, n), Pm_coefficients(m, n), tol);
    rep.q_coeffs = Qm_coefficients(m, n);
    return rep;
}

int n_star(int m) {
    if (m < 2 || m % 2 != 0) throw DomainError("n_star needs m even >= 2");
    // the ratio A_{n,m/2} / lambda_S increases with n, so a linear scan suffices
    for (int n = 2 * m + 1; n < 100000; ++n)
        if (lambda_S(m, n) <= A_const(n, m / 2)) return n;
    throw NumericalError("n_star: scan did not terminate");
}

int stability_threshold_m12(int m) {
    if (m != 1 && m != 2) throw DomainError("stability_threshold_m12 needs m in {1, 2}");
    for (int n = 2 * m + 1;; ++n) {
        const double rhs = m == 1 ? B_const(n, 0) : A_const(n, 1);
        if (lambda_S(m, n) <= rhs) return n;
    }
}

std::vector<PlotPoint> Pm_plot_data(int m, int n, double t_lo, double t_hi, int samples) {
    if (samples < 2 || !(t_hi > t_lo)) throw DomainError("plot data needs t_lo < t_hi and >= 2 samples");
    const auto c = Pm_coefficients(m, n);
    std::vector<PlotPoint> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double t = t_lo + (t_hi - t_lo) * i / (samples - 1);
        pts.push_back({t, evaluate_polynomial(c, t)});
    }
    return pts;
}

}  // namespace gelfand
