#include <cmath>

#include "doctest.h"
#include "gelfand/explicit_solution.hpp"
#include "gelfand/quadrature.hpp"

using namespace gelfand;

namespace {

// Radial Laplacian of a polynomial sum c_p r^p in dimension n: Delta r^p = p(p+n-2) r^{p-2}.
std::vector<double> poly_laplacian(const std::vector<double>& c, int n) {
    std::vector<double> out(c.size() < 2 ? 1 : c.size() - 2, 0.0);
    for (std::size_t p = 2; p < c.size(); ++p) out[p - 2] = c[p] * p * (p + n - 2.0);
    return out;
}

}  // namespace

TEST_CASE("constant and evaluation") {
    const auto s = ExplicitSolution::make(2, 1.0);
    CHECK(s.c == doctest::Approx(4.0 * std::log(2.0) + std::log(24.0)).epsilon(1e-15));
    CHECK(eval_explicit(s, 0.0) == doctest::Approx(5.950643).epsilon(1e-6));
    for (int m = 1; m <= 6; ++m) {
        double fact = 1.0;
        for (int i = 2; i <= 2 * m; ++i) fact *= i;
        const auto e = ExplicitSolution::make(m, 0.7);
        CHECK(e.c == doctest::Approx(2.0 * m * std::log(2.0 * std::pow(fact, 1.0 / (2 * m)) * 0.7)).epsilon(1e-14));
    }
    // far field: u + 4m log r -> c - 2m log lambda^2
    const auto f = ExplicitSolution::make(3, 1.5);
    const double r = 1e7;
    CHECK(eval_explicit(f, r) + 12.0 * std::log(r) == doctest::Approx(f.c - 6.0 * std::log(2.25)).epsilon(1e-10));
    // scaling
    const auto a = ExplicitSolution::make(2, 1.0);
    const auto b = ExplicitSolution::make(2, 2.0);
    for (double x : {0.0, 0.3, 1.0, 7.0}) CHECK(eval_explicit(b, x) == doctest::Approx(eval_explicit(a, 2.0 * x) + 4.0 * std::log(2.0)));
    CHECK_THROWS_AS(ExplicitSolution::make(2, 0.0), DomainError);
    CHECK_THROWS_AS(eval_explicit(a, -1.0), DomainError);
}

TEST_CASE("initial values against the polynomial Laplacian oracle") {
    const auto ic = explicit_initial_values(2, 1.0);
    CHECK(ic.alpha[0] == doctest::Approx(5.950643).epsilon(1e-6));
    CHECK(ic.alpha[1] == -32.0);
    CHECK(explicit_initial_values(4, 1.0).alpha[1] == -128.0);

    for (int m = 2; m <= 6; ++m) {
        const auto sol = ExplicitSolution::make(m, 1.3);
        const int n = 2 * m;
        // truncated even series u = c + sum a_j r^{2j} as a dense polynomial
        std::vector<double> poly(static_cast<std::size_t>(4 * (m + 2) + 1), 0.0);
        poly[0] = sol.c;
        for (int j = 1; 2 * j < static_cast<int>(poly.size()); ++j) {
            const double sign = j % 2 == 0 ? 1.0 : -1.0;
            poly[static_cast<std::size_t>(2 * j)] = 2.0 * m * sign * std::pow(1.3, 2 * j) / j;
        }
        const auto vals = explicit_initial_values(m, 1.3);
        std::vector<double> cur = poly;
        for (int k = 1; k < m; ++k) {
            cur = poly_laplacian(cur, n);
            CHECK(vals.alpha[static_cast<std::size_t>(k)] == doctest::Approx(cur[0]).epsilon(1e-12));
        }
    }
    // scaling of the data
    const auto one = explicit_initial_values(3, 1.0);
    const auto two = explicit_initial_values(3, 2.0);
    CHECK(two.alpha[0] == doctest::Approx(one.alpha[0] + 6.0 * std::log(2.0)));
    CHECK(two.alpha[1] == doctest::Approx(4.0 * one.alpha[1]));
    CHECK(two.alpha[2] == doctest::Approx(16.0 * one.alpha[2]));
    CHECK_THROWS_AS(explicit_initial_values(1, 1.0), DomainError);
}

TEST_CASE("series and jet branches of explicit_state agree") {
    for (int m : {2, 3, 4}) {
        const auto sol = ExplicitSolution::make(m, 1.0);
        const auto below = explicit_state(sol, 0.4999999);
        const auto above = explicit_state(sol, 0.5000001);
        for (int k = 0; k < m; ++k) {
            CHECK(below.w[k] == doctest::Approx(above.w[k]).epsilon(1e-6));
            CHECK(below.dw[k] == doctest::Approx(above.dw[k]).epsilon(1e-6));
        }
        const auto origin = explicit_state(sol, 1e-9);
        const auto ic = explicit_initial_values(m, 1.0);
        for (int k = 0; k < m; ++k) CHECK(origin.w[k] == doctest::Approx(ic.alpha[k]).epsilon(1e-12));
    }
}

TEST_CASE("residual of the closed form") {
    CHECK(explicit_residual(ExplicitSolution::make(1, 1.0), {0.5, 1.0, 2.0}) <= 1e-10);
    std::vector<double> rs;
    for (int i = 0; i <= 200; ++i) rs.push_back(0.1 * std::pow(100.0, i / 200.0));
    const double r2 = explicit_residual(ExplicitSolution::make(2, 1.0), rs);
    CHECK(r2 <= 1e-8);
    CHECK(explicit_residual(ExplicitSolution::make(2, 3.0), rs) <= 1e-8);
    CHECK(explicit_residual(ExplicitSolution::make(3, 1.0), rs) <= 1e-8);
}

TEST_CASE("mass is finite and matches the beta-function integral") {
    for (int m = 1; m <= 3; ++m) {
        const auto sol = ExplicitSolution::make(m, 1.7);
        const double mass = explicit_mass(sol);
        CHECK(std::isfinite(mass));
        // int_0^inf r^{2m-1} (1+l^2 r^2)^{-2m} dr = B(m, m) / (2 l^{2m})
        const double beta = std::exp(2.0 * std::lgamma(m) - std::lgamma(2.0 * m));
        const double exact = unit_sphere_area(2 * m) * std::exp(sol.c) * beta / (2.0 * std::pow(1.7, 2 * m));
        CHECK(mass == doctest::Approx(exact).epsilon(1e-9));
    }
}

TEST_CASE("round trip through the radial integrator") {
    const auto sol = ExplicitSolution::make(2, 1.0);
    IntegratorConfig cfg;
    cfg.r_max = 10.0;
    const auto t = integrate(ProblemSpec::make(2, 4), explicit_initial_values(2, 1.0), cfg);
    REQUIRE(t.terminal().r == 10.0);
    for (const auto& s : t.samples) {
        const double u = eval_explicit(sol, s.r);
        CHECK(std::abs(s.w[0] - u) <= 100.0 * cfg.rtol * std::max(1.0, std::abs(u)));
    }
    const auto e = explicit_trajectory(sol, cfg);
    CHECK(e.samples.size() == t.samples.size());
    CHECK(e.samples.back().r == 10.0);
}
