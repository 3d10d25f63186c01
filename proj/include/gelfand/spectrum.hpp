#pragma once

// Characteristic polynomials of the radial operator in Emden variables:
//   Q_m(t) = (-1)^m prod_{j=0}^{m-1} (t-2j)(t+n-2j-2),   P_m = Q_m - lambda_S.

#include <complex>
#include <cstdint>
#include <vector>

namespace gelfand {

/// Coefficients c_0..c_{2m} (ascending powers) of Q_m, exact in 128-bit
/// integers. Throws NumericalError if they overflow.
std::vector<__int128> Qm_coefficients_exact(int m, int n);
std::vector<double> Qm_coefficients(int m, int n);

/// Q_m - lambda_S in ascending powers.
std::vector<double> Pm_coefficients(int m, int n);

double evaluate_polynomial(const std::vector<double>& c, double t);

struct PolynomialRoot {
    std::complex<double> z;
    double residual_bound = 0.0;  // |p(z)| relative to sum |c_i| |z|^i
};

/// All roots of a polynomial (ascending coefficients, nonzero leading term) by
/// Aberth-Ehrlich iteration in extended precision with Newton polishing.
std::vector<PolynomialRoot> polynomial_roots(const std::vector<double>& c);

/// Coefficients of lead * prod (t - z_i), ascending.
std::vector<std::complex<double>> expand_roots(const std::vector<std::complex<double>>& roots, double lead);

struct SpectrumReport {
    int m = 0;
    int n = 0;
    double lambda_S = 0.0;
    std::vector<double> q_coeffs;
    std::vector<double> p_coeffs;
    std::vector<PolynomialRoot> roots;
    bool has_nonreal = false;
    double tol = 1e-8;
    double roundtrip_error = 0.0;  // max relative coefficient error after re-expansion
};

/// Roots of P_m for n > 2m; nonreal means |Im z| > tol (1 + |z|).
SpectrumReport Pm_roots(int m, int n, double tol = 1e-8);

/// Roots of an arbitrary coefficient vector, classified the same way.
SpectrumReport classify_polynomial(int m, int n, double lambda, std::vector<double> p_coeffs,
                                   double tol = 1e-8);

/// Smallest n > 2m with lambda_S(m, n) <= A_{n, m/2}; m even >= 2.
int n_star(int m);

/// Smallest n with 2(n-2) <= (n-2)^2/4 (m = 1) or 8(n-2)(n-4) <= n^2(n-4)^2/16 (m = 2), n > 2m.
int stability_threshold_m12(int m);

struct PlotPoint {
    double t;
    double p;
};
std::vector<PlotPoint> Pm_plot_data(int m, int n, double t_lo, double t_hi, int samples);

}  // namespace gelfand
