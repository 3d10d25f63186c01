#pragma once

// Quadrature checks of the weighted Hardy-Rellich inequalities on radial
// test functions.

#include <cstddef>
#include <string>

#include "gelfand/quadrature.hpp"
#include "gelfand/test_functions.hpp"

namespace gelfand {

/// Delta^k phi (gradient = false) or (Delta^k phi)' (gradient = true) at r > 0
/// in dimension n, from a jet of order 2k (+1).
double iterated_laplacian(const RadialTestFunction& phi, double r, int n, int k, bool gradient);

/// Quadrature rule covering the support of phi with `panels` log-spaced
/// Gauss-Legendre panels of 32 nodes (one extra panel at the origin for balls).
QuadratureRule support_rule(const RadialTestFunction& phi, std::size_t panels = 64);

enum class HRInequality {
    Rellich,             // prod mu  int phi^2 |x|^{-4k}        <= int |Delta^k phi|^2
    RellichGradient,     // ((n-2)/2)^2 prod mu  int phi^2 |x|^{-4k-2} <= int |grad Delta^k phi|^2
    LogSecondOrder,      // 2 gbar_{n,a} ((b+1)/2)^2 int |x|^{a-4} phi^2 (log|x|)^{-b-2} <= int |x|^a |Delta phi|^2 (log|x|)^{-b}
    LogRellich,          // log-weighted |x|^{-4k} (log|x|)^{-2k}
    LogRellichGradient,  // log-weighted |x|^{-4k-2} (log|x|)^{-2k-2}
    OneDimensional,      // 1-D: int phi^2 |x|^{-4k-2} <= int |phi^{(2k+1)}|^2
};

std::string to_string(HRInequality v);
HRInequality hr_inequality_from_string(const std::string& s);

struct HRQuery {
    int n = 3;
    int k = 1;
    double alpha = 0.0;  // weight exponent (LogSecondOrder)
    double beta = 0.0;   // log exponent (LogSecondOrder)
};

struct HRCheck {
    double lhs = 0.0;       // weighted L^2 side, without the constant
    double rhs = 0.0;       // derivative energy
    double constant = 0.0;
    double margin = 0.0;    // rhs - constant * lhs
    double R = 1.0;         // exterior radius used by the log-weighted forms
};

/// Both sides by composite Gauss-Legendre quadrature (>= 2000 nodes) with
/// exact jet derivatives. The support must lie in (max(R, 1), inf) for the
/// log-weighted forms and away from the origin otherwise.
HRCheck verify_hr_inequality(HRInequality variant, const HRQuery& query, const RadialTestFunction& phi,
                             double R = 1.0, std::size_t panels = 64);

}  // namespace gelfand
