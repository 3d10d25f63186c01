#include <cmath>
#include <random>

#include "doctest.h"
#include "gelfand/explicit_solution.hpp"
#include "gelfand/shooting.hpp"

using namespace gelfand;

TEST_CASE("classification of the spec scenarios") {
    auto o = classify(integrate(ProblemSpec::make(2, 5), {{0.0, 0.0}}));
    CHECK(o.tag == OutcomeTag::BlowUp);
    CHECK(o.source == TerminalEvent::FluxSignEvent);
    CHECK(o.r_event == IntegratorConfig{}.r0);

    o = classify(integrate(ProblemSpec::make(2, 5), {{0.0, -100.0}}));
    CHECK(o.tag == OutcomeTag::GlobalToHorizon);

    IntegratorConfig far;
    far.r_max = 1e8;
    o = classify(integrate(ProblemSpec::make(2, 2), {{0.0, -5.0}}, far));
    CHECK(o.tag == OutcomeTag::BlowUp);
    CHECK(o.source == TerminalEvent::OverflowGuard);

    o = classify(integrate(ProblemSpec::make(3, 5), {{0.0, 0.0, 0.0}}));
    CHECK(o.tag == OutcomeTag::GlobalToHorizon);
}

TEST_CASE("classify synthetic trajectories") {
    Trajectory t;
    t.problem = ProblemSpec::make(2, 2);
    t.ic.alpha = {0.0, -1.0};
    RadialState s;
    s.r = 1.0;
    s.w = {0.0, 0.5};
    s.dw = {0.0, 0.0};
    t.samples.push_back(s);
    t.terminal_event = TerminalEvent::ReachedHorizon;
    CHECK(classify(t).tag == OutcomeTag::Inconclusive);
    t.samples.back().w[1] = -0.5;
    CHECK(classify(t).tag == OutcomeTag::GlobalToHorizon);
    t.terminal_event = TerminalEvent::Failure;
    CHECK(classify(t).tag == OutcomeTag::Inconclusive);
}

TEST_CASE("phi_alpha preconditions") {
    CHECK_THROWS_AS(phi_alpha(ProblemSpec::make(3, 5), 0.0, {0.0}), DomainError);
    CHECK_THROWS_AS(phi_alpha(ProblemSpec::make(2, 2), 0.0, {}), DomainError);
    CHECK_THROWS_AS(phi_alpha(ProblemSpec::make(2, 5), 0.0, {}, 0.0), DomainError);
    CHECK_THROWS_AS(phi_alpha(ProblemSpec::make(4, 9), 0.0, {}), DomainError);
}

TEST_CASE("phi_alpha brackets") {
    const auto p = ProblemSpec::make(2, 5);
    IntegratorConfig cfg;
    cfg.r_max = 1e3;
    const auto res = phi_alpha(p, 0.0, {}, 1e-4, cfg);
    CHECK(res.phi_estimate < 0.0);
    CHECK(res.b_global < res.b_blowup);
    CHECK(res.b_blowup - res.b_global <= 1e-4);
    CHECK(res.phi_estimate >= res.b_global);
    CHECK(res.phi_estimate <= res.b_blowup);
    CHECK(classify_ic(p, {{0.0, res.b_global}}, cfg).tag == OutcomeTag::GlobalToHorizon);
    CHECK(classify_ic(p, {{0.0, res.b_blowup}}, cfg).tag == OutcomeTag::BlowUp);
    // half-line structure around the estimate
    CHECK(classify_ic(p, {{0.0, res.phi_estimate + 0.1}}, cfg).tag == OutcomeTag::BlowUp);
    CHECK(classify_ic(p, {{0.0, res.phi_estimate - 0.1}}, cfg).tag == OutcomeTag::GlobalToHorizon);

    // scaled data classify like the originals
    for (double lambda : {0.5, 2.0}) {
        for (double beta : {res.phi_estimate - 0.5, res.phi_estimate + 0.5}) {
            const auto a = classify_ic(p, {{0.0, beta}}, cfg).tag;
            IntegratorConfig c2 = cfg;
            c2.r_max = cfg.r_max / lambda;
            const auto b = classify_ic(p, {{4.0 * std::log(lambda), lambda * lambda * beta}}, c2).tag;
            CHECK(a == b);
        }
    }
}

TEST_CASE("explicit solution sits on the boundary (m=2, n=4)") {
    const double alpha = explicit_initial_values(2, 1.0).alpha[0];
    const auto res = phi_alpha(ProblemSpec::make(2, 4), alpha, {}, 1e-6);
    MESSAGE("phi = " << res.phi_estimate << " after " << res.evaluations << " integrations");
    CHECK(std::abs(res.phi_estimate + 32.0) <= 0.01 * 32.0);
}

TEST_CASE("scan_phi_monotonicity") {
    CHECK_THROWS_AS(scan_phi_monotonicity(ProblemSpec::make(2, 5), 0.0, 1, {0.0}), DomainError);
    CHECK_THROWS_AS(scan_phi_monotonicity(ProblemSpec::make(4, 9), 0.0, 1, {1.0, 0.0}), DomainError);
    IntegratorConfig cfg;
    cfg.r_max = 1e3;
    const double tol = 1e-4;
    const auto one = scan_phi_monotonicity(ProblemSpec::make(4, 9), 0.0, 1, {0.5}, tol, cfg);
    CHECK(one.size() == 1);
    const auto pts = scan_phi_monotonicity(ProblemSpec::make(4, 9), 0.0, 1, {-1.0, 0.0, 1.0}, tol, cfg, 3);
    REQUIRE(pts.size() == 3);
    for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i].second < pts[i - 1].second - 2.0 * tol);
}

TEST_CASE("comparison check") {
    const auto p = ProblemSpec::make(2, 5);
    auto rep = comparison_check(p, {{0.0, -1.0}}, {{0.0, -1.0}});
    CHECK(rep.holds);
    CHECK(rep.min_gap == 0.0);
    rep = comparison_check(ProblemSpec::make(2, 3), {{0.5, -1.0}}, {{0.0, -1.0}});
    CHECK(rep.holds);
    CHECK(rep.compared_samples > 10);
    rep = comparison_check(p, {{0.0, -1.0}}, {{0.0, -2.0}});
    CHECK(rep.holds);
    // reversed order must be detected
    rep = comparison_check(p, {{0.0, -2.0}}, {{0.0, -1.0}});
    CHECK_FALSE(rep.holds);
    REQUIRE(rep.first_violation);
    CHECK(rep.first_violation->gap < 0.0);
}
