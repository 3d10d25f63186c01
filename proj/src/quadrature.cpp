#include "gelfand/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace gelfand {

QuadratureRule gauss_legendre(std::size_t points) {
    if (points == 0) throw std::invalid_argument("gauss_legendre: need at least one node");
    QuadratureRule rule;
    rule.nodes.assign(points, 0.0);
    rule.weights.assign(points, 2.0);
    if (points == 1) return rule;

    // P_N(x) and P_N'(x) by the three-term recurrence
    const auto legendre = [points](double x) {
        double p0 = 1.0;
        double p1 = x;
        for (std::size_t k = 2; k <= points; ++k) {
            const auto kk = static_cast<double>(k);
            const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
            p0 = p1;
            p1 = p2;
        }
        const double dp = static_cast<double>(points) * (x * p1 - p0) / (x * x - 1.0);
        return std::pair{p1, dp};
    };

    const auto n = static_cast<double>(points);
    for (std::size_t i = 0; i < points / 2; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            const auto [p, dp] = legendre(x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double dp = legendre(x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[points - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[points - 1 - i] = w;
    }
    if (points % 2 == 1) {
        const double dp = legendre(0.0).second;
        rule.nodes[points / 2] = 0.0;
        rule.weights[points / 2] = 2.0 / (dp * dp);
    }
    return rule;
}

namespace {

void append_panel(QuadratureRule& out, const QuadratureRule& base, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    for (std::size_t i = 0; i < base.nodes.size(); ++i) {
        out.nodes.push_back(mid + half * base.nodes[i]);
        out.weights.push_back(half * base.weights[i]);
    }
}

}  // namespace

QuadratureRule composite_log_rule(double lo, double hi, std::size_t panels,
                                  std::size_t points_per_panel) {
    if (!(lo > 0.0) || !(hi > lo) || panels == 0)
        throw std::invalid_argument("composite_log_rule: need 0 < lo < hi and panels > 0");
    const QuadratureRule base = gauss_legendre(points_per_panel);
    QuadratureRule rule;
    rule.nodes.reserve(panels * points_per_panel);
    rule.weights.reserve(panels * points_per_panel);
    const double ratio = std::log(hi / lo);
    double a = lo;
    for (std::size_t p = 1; p <= panels; ++p) {
        const double b = p == panels
                             ? hi
                             : lo * std::exp(ratio * static_cast<double>(p) / static_cast<double>(panels));
        append_panel(rule, base, a, b);
        a = b;
    }
    return rule;
}

QuadratureRule composite_rule_from_origin(double hi, std::size_t panels,
                                          std::size_t points_per_panel, double tiny) {
    const double lo = hi * tiny;
    QuadratureRule rule;
    append_panel(rule, gauss_legendre(points_per_panel), 0.0, lo);
    QuadratureRule rest = composite_log_rule(lo, hi, panels, points_per_panel);
    rule.nodes.insert(rule.nodes.end(), rest.nodes.begin(), rest.nodes.end());
    rule.weights.insert(rule.weights.end(), rest.weights.begin(), rest.weights.end());
    return rule;
}

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(rule.nodes[i]);
    return sum;
}

double unit_sphere_area(int n) {
    const double half = 0.5 * static_cast<double>(n);
    return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

std::vector<double> fd_weights(int derivative, double x0, std::span<const double> offsets) {
    // Fornberg (1988), "Generation of finite difference formulas on arbitrarily
    // spaced grids".
    const std::size_t npts = offsets.size();
    const auto mder = static_cast<std::size_t>(derivative);
    if (npts <= mder) throw std::invalid_argument("fd_weights: stencil too small for derivative order");
    std::vector<std::vector<double>> c(npts, std::vector<double>(mder + 1, 0.0));
    double c1 = 1.0;
    double c4 = offsets[0] - x0;
    c[0][0] = 1.0;
    for (std::size_t i = 1; i < npts; ++i) {
        const std::size_t mn = std::min(i, mder);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = offsets[i] - x0;
        for (std::size_t j = 0; j < i; ++j) {
            const double c3 = offsets[i] - offsets[j];
            c2 *= c3;
            if (j == i - 1) {
                for (std::size_t k = mn; k >= 1; --k)
                    c[i][k] = c1 * (static_cast<double>(k) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (std::size_t k = mn; k >= 1; --k)
                c[j][k] = (c4 * c[j][k] - static_cast<double>(k) * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(npts);
    for (std::size_t i = 0; i < npts; ++i) w[i] = c[i][mder];
    return w;
}

}  // namespace gelfand
