#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gelfand {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1] with `points` nodes (Newton iteration on P_N).
QuadratureRule gauss_legendre(std::size_t points);

/// Composite Gauss-Legendre rule on [lo, hi] (lo > 0) with log-spaced panel
/// breakpoints. A rule built on [s*lo, s*hi] is the s-scaled copy of the one on
/// [lo, hi] up to rounding.
QuadratureRule composite_log_rule(double lo, double hi, std::size_t panels,
                                  std::size_t points_per_panel = 32);

/// Same, on [0, hi]: one panel on [0, hi*tiny] followed by log-spaced panels.
QuadratureRule composite_rule_from_origin(double hi, std::size_t panels,
                                          std::size_t points_per_panel = 32,
                                          double tiny = 1e-8);

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f);

/// Surface measure of the unit sphere S^{n-1} in R^n: 2 pi^{n/2} / Gamma(n/2).
double unit_sphere_area(int n);

/// Fornberg's finite-difference weights for the derivative of order
/// `derivative` at x0, given stencil offsets.
std::vector<double> fd_weights(int derivative, double x0, std::span<const double> offsets);

}  // namespace gelfand
