#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "gelfand/explicit_solution.hpp"
#include "gelfand/quadrature.hpp"
#include "gelfand/shooting.hpp"
#include "gelfand/stability.hpp"

using namespace gelfand;

namespace {

Trajectory synthetic_constant(const ProblemSpec& p, double value, double r_max) {
    Trajectory t;
    t.problem = p;
    t.ic.alpha.assign(static_cast<std::size_t>(p.m), 0.0);
    t.ic.alpha[0] = value;
    for (double r = 1e-3; r <= r_max * (1 + 1e-12); r *= std::pow(10.0, 0.01)) {
        RadialState s;
        s.r = r;
        s.w.assign(static_cast<std::size_t>(p.m), 0.0);
        s.w[0] = value;
        s.dw.assign(static_cast<std::size_t>(p.m), 0.0);
        t.samples.push_back(s);
    }
    t.terminal_event = TerminalEvent::ReachedHorizon;
    t.r_event = t.samples.back().r;
    return t;
}

Trajectory interior(const ProblemSpec& p, double alpha, double depth) {
    const auto s = phi_alpha(p, alpha, {}, 1e-8);
    return integrate(p, InitialConditions{{alpha, s.phi_estimate - depth}});
}

}  // namespace

TEST_CASE("rayleigh form basics") {
    const auto p = ProblemSpec::make(2, 3);
    const auto u = RadialProfile::constant(0.0);
    CHECK(rayleigh_form(u, RadialTestFunction::zero(), p).value == 0.0);

    // homogeneity of degree two
    const auto phi = RadialTestFunction::bump(0.5, 3.0);
    const double f1 = rayleigh_form(u, phi, p).value;
    for (double c : {-3.0, 0.25, 7.0}) {
        const double fc = rayleigh_form(u, phi.scaled(c), p).value;
        CHECK(fc == doctest::Approx(c * c * f1).epsilon(1e-12));
    }
}

TEST_CASE("derivative term scales like R^{n-2m}") {
    const auto u = RadialProfile::constant(0.0);
    for (auto [m, n] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{2, 7}, std::pair{3, 5}, std::pair{1, 3}}) {
        const auto p = ProblemSpec::make(m, n);
        const double t1 = rayleigh_form(u, RadialTestFunction::cutoff(1.0), p).derivative_term;
        for (double R : {3.0, 47.5, 1000.0}) {
            const double tR = rayleigh_form(u, RadialTestFunction::cutoff(R), p).derivative_term;
            CHECK(tR == doctest::Approx(std::pow(R, n - 2 * m) * t1).epsilon(1e-10));
        }
    }
}

TEST_CASE("derivative term against finite differences") {
    // m = 2, n = 3: int |Delta phi|^2 with Delta phi = phi'' + 2 phi'/r by central differences
    const auto p = ProblemSpec::make(2, 3);
    const auto phi = RadialTestFunction::bump(1.0, 4.0);
    const double h = 2e-4;
    const int N = 30000;
    double sum = 0.0;
    for (int i = 0; i <= N; ++i) {
        const double r = 1.0 + 3.0 * i / N;
        const double d1 = (phi.value(r + h) - phi.value(r - h)) / (2 * h);
        const double d2 = (phi.value(r + h) - 2 * phi.value(r) + phi.value(r - h)) / (h * h);
        const double lap = d2 + 2.0 * d1 / r;
        sum += (i == 0 || i == N ? 0.5 : 1.0) * lap * lap * r * r;
    }
    sum *= 3.0 / N * 4.0 * std::numbers::pi;
    const auto f = rayleigh_form(RadialProfile::constant(-1e6), phi, p);
    CHECK(f.derivative_term == doctest::Approx(sum).epsilon(1e-5));
    CHECK(f.potential_term == 0.0);
}

TEST_CASE("potential term recovers the explicit total mass") {
    for (int m : {1, 2}) {
        const auto sol = ExplicitSolution::make(m, 1.0);
        const auto t = explicit_trajectory(sol);
        const auto f = rayleigh_form(RadialProfile::from_trajectory(t), RadialTestFunction::dyadic(12), t.problem);
        CHECK(f.extended);
        CHECK(f.potential_term == doctest::Approx(explicit_mass(sol)).epsilon(1e-6));
    }
}

TEST_CASE("tail extension agrees with longer data") {
    const auto sol = ExplicitSolution::make(2, 1.0);
    IntegratorConfig shortcfg;
    shortcfg.r_max = 100.0;
    const auto full = RadialProfile::from_trajectory(explicit_trajectory(sol));
    const auto cut = RadialProfile::from_trajectory(explicit_trajectory(sol, shortcfg));
    bool e1 = false;
    bool e2 = false;
    for (double r : {200.0, 1000.0, 5000.0}) {
        CHECK(cut(r, e1) == doctest::Approx(full(r, e2)).epsilon(1e-4));
        CHECK(cut(r, e1) == doctest::Approx(eval_explicit(sol, r)).epsilon(1e-4));
    }
    CHECK(e1);
    CHECK_FALSE(e2);

    // power growth of an interior m-even solution
    const auto p = ProblemSpec::make(2, 5);
    const auto t = interior(p, 0.0, 5.0);
    IntegratorConfig c100;
    c100.r_max = 100.0;
    const auto t100 = integrate(p, t.ic, c100);
    const auto longer = RadialProfile::from_trajectory(t);
    const auto shorter = RadialProfile::from_trajectory(t100);
    CHECK(shorter(1000.0, e1) == doctest::Approx(longer(1000.0, e2)).epsilon(1e-3));
}

TEST_CASE("profile without extension refuses to extrapolate") {
    const auto p = ProblemSpec::make(2, 3);
    const auto blow = integrate(p, InitialConditions{{0.0, 0.0}});
    REQUIRE(blow.terminal_event == TerminalEvent::FluxSignEvent);
    const auto prof = RadialProfile::from_trajectory(blow);
    CHECK_FALSE(prof.can_extend());
    CHECK_THROWS_AS(rayleigh_form(prof, RadialTestFunction::cutoff(1e3), p), DomainError);
}

TEST_CASE("instability witnesses for n <= 2m") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    std::uniform_real_distribution<double> D(0.1, 5.0);
    // (2,3): any global trajectory
    for (int i = 0; i < 5; ++i) {
        const auto p = ProblemSpec::make(2, 3);
        const auto t = interior(p, U(rng), D(rng));
        REQUIRE(classify(t).tag == OutcomeTag::GlobalToHorizon);
        const auto rep = instability_search(RadialProfile::from_trajectory(t), p, Family::ScaledCutoff);
        CHECK(rep.verdict == Verdict::InstabilityWitnessFound);
    }
    // (3,5): all solutions are global
    for (int i = 0; i < 5; ++i) {
        const auto p = ProblemSpec::make(3, 5);
        const auto t = integrate(p, InitialConditions{{U(rng), U(rng), U(rng)}});
        REQUIRE(t.terminal_event == TerminalEvent::ReachedHorizon);
        const auto rep = instability_search(RadialProfile::from_trajectory(t), p, Family::ScaledCutoff);
        CHECK(rep.verdict == Verdict::InstabilityWitnessFound);
    }
    // n = 2m: dyadic averages on the explicit solutions and near-boundary data
    for (int m : {1, 2}) {
        const auto t = explicit_trajectory(ExplicitSolution::make(m, 1.0));
        const auto rep = instability_search(RadialProfile::from_trajectory(t), t.problem, Family::DyadicSum);
        CHECK(rep.verdict == Verdict::InstabilityWitnessFound);
    }
    const auto p24 = ProblemSpec::make(2, 4);
    const auto near = interior(p24, 0.0, 1e-3);
    const auto rep = instability_search(RadialProfile::from_trajectory(near), p24, Family::DyadicSum);
    CHECK(rep.verdict == Verdict::InstabilityWitnessFound);
    // witness present iff some value is negative, and it is the first one
    bool seen = false;
    for (const auto& [k, f] : rep.form_values) {
        if (f.value < 0 && !seen) {
            CHECK(rep.witness == k);
            seen = true;
        }
    }
    CHECK(seen);
}

TEST_CASE("no witness when the potential vanishes") {
    const auto p = ProblemSpec::make(1, 5);
    const auto u = RadialProfile::constant(-1e6);
    for (auto fam : {Family::ScaledCutoff, Family::DyadicSum}) {
        const auto rep = instability_search(u, p, fam);
        CHECK(rep.verdict == Verdict::NoWitnessInFamily);
        CHECK_FALSE(rep.witness);
        for (const auto& [x, f] : rep.form_values) CHECK(f.value > 0.0);
    }
    CHECK(family_from_string("dyadic") == Family::DyadicSum);
    CHECK_THROWS_AS(family_from_string("other"), DomainError);
}

TEST_CASE("certificate weights") {
    const auto v23 = socs_weight(ProblemSpec::make(2, 3));
    CHECK(v23.table_case == 4);
    CHECK(v23(2.0) == doctest::Approx(9.0 / 16.0 / 16.0).epsilon(1e-14));

    const auto v24 = socs_weight(ProblemSpec::make(2, 4));
    CHECK(v24.table_case == 1);
    const double r = 7.0;
    CHECK(v24(r) == doctest::Approx(1.0 / (std::pow(r, 4) * std::pow(std::log(r), 2))).epsilon(1e-14));

    const auto v11 = socs_weight(ProblemSpec::make(1, 1));
    CHECK(v11.table_case == 3);
    CHECK(v11(3.0) == 0.0);

    // m = 3, n = 1: int |phi'''|^2 >= ((1*3*5)/2^3)^2 int phi^2 / x^6
    CHECK(socs_weight(ProblemSpec::make(3, 1))(2.0) == doctest::Approx(225.0 / 64.0 / 64.0));
    CHECK(socs_weight(ProblemSpec::make(3, 4)).table_case == 2);
    CHECK(socs_weight(ProblemSpec::make(3, 9)).table_case == 5);
    CHECK(socs_weight(ProblemSpec::make(2, 9)).table_case == 4);
    CHECK_THROWS_AS(socs_weight(ProblemSpec::make(2, 1)), DomainError);
    CHECK_THROWS_AS(socs_weight(ProblemSpec::make(2, 2)), DomainError);
    CHECK_THROWS_AS(socs_weight(ProblemSpec::make(1, 2)), DomainError);
}

TEST_CASE("stability outside a compact set") {
    {
        const auto p = ProblemSpec::make(3, 5);
        const auto t = integrate(p, InitialConditions{{0.0, 1.0, 0.0}});
        const auto rep = socs_certificate(t);
        CHECK(rep.verdict == Verdict::CertifiedOutsideCompact);
        CHECK(rep.certificate_radius * 10 <= t.samples.back().r);
    }
    {
        const auto p = ProblemSpec::make(2, 5);
        for (double depth : {0.5, 5.0}) {
            const auto rep = socs_certificate(interior(p, 0.0, depth));
            CHECK(rep.verdict == Verdict::CertifiedOutsideCompact);
        }
    }
    {
        const auto t = explicit_trajectory(ExplicitSolution::make(2, 1.0));
        const auto rep = socs_certificate(t);
        CHECK(rep.verdict == Verdict::CertifiedOutsideCompact);
        // e^u ~ 384 r^{-8} meets r^{-4} (log r)^{-2} near r = 5.5
        CHECK(rep.certificate_radius > 3.0);
        CHECK(rep.certificate_radius < 10.0);
    }
    {
        const auto rep = socs_certificate(synthetic_constant(ProblemSpec::make(2, 5), 0.0, 1e4));
        CHECK(rep.verdict == Verdict::Inconclusive);
        CHECK(rep.certificate_radius == 0.0);
    }
    {
        // blow-up data cannot be certified
        const auto t = integrate(ProblemSpec::make(2, 5), InitialConditions{{0.0, 0.0}});
        CHECK(socs_certificate(t).verdict == Verdict::Inconclusive);
    }
}
