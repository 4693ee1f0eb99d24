#include <random>

#include "doctest.h"
#include "riskframe/cost.hpp"
#include "riskframe/risk.hpp"

using namespace riskframe;

namespace {

struct Fixture {
    Scenario s = Scenario::reference();
    MemberDesign d = design_members(s);
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "mode probabilities given the initial damage") {
    const ModeProbabilities p = mode_probabilities(s, d, {1.0, 1.0}, 1);
    CHECK(p.p_B == doctest::Approx(0.021233717550573447).epsilon(1e-9));
    CHECK(p.p_PL == doctest::Approx(0.03626460014192451).epsilon(1e-9));
    CHECK(p.p_PG == doctest::Approx(0.0002731186994023413).epsilon(1e-9));
    const ModeProbabilities q = mode_probabilities(s, d, {1.0, 1.0}, 3);
    CHECK(q.p_B == doctest::Approx(0.9983744278115733).epsilon(1e-9));
    CHECK(q.p_PL == doctest::Approx(0.7932708111860345).epsilon(1e-9));
    CHECK_THROWS_AS(mode_probabilities(s, d, {1.0, 1.0}, 8), DomainError);
}

TEST_CASE_FIXTURE(Fixture, "total expected cost against an independent evaluation") {
    const std::pair<DesignFactors, double> cases[] = {
        {{1.0, 1.0}, 1.357751220464925},
        {{0.9, 1.3}, 1.1668658869688526},
        {{0.5, 2.0}, 1.488923226968362},
        {{2.0, 0.6}, 9.24858396464625},
    };
    for (const auto& [f, expected] : cases) CHECK(total_expected_cost(s, d, f) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE_FIXTURE(Fixture, "two-factor chain weighting") {
    s.chain = ChainWeighting::TwoFactor;
    CHECK(total_expected_cost(s, d, {1.0, 1.0}) == doctest::Approx(5.719488378937845).epsilon(1e-10));
    CHECK(total_expected_cost(s, d, {0.5, 2.0}) == doctest::Approx(2.0748117440528446).epsilon(1e-10));
}

TEST_CASE("total expected cost of other frames and damages") {
    Scenario tall = Scenario::reference();
    tall.geometry.n_s = 16;
    tall.geometry.n_c = 5;
    tall.p_LD = 0.01;
    CHECK(total_expected_cost(tall, design_members(tall), {1.2, 1.5}) ==
          doctest::Approx(1.1174650557073762).epsilon(1e-10));

    Scenario low = Scenario::reference();
    low.geometry.n_s = 4;
    low.geometry.n_c = 17;
    low.p_LD = 0.05;
    CHECK(total_expected_cost(low, design_members(low), {0.7, 1.4}) ==
          doctest::Approx(1.2143568638207476).epsilon(1e-10));

    Scenario wide = Scenario::reference();
    wide.damage = {2, 1};
    CHECK(total_expected_cost(wide, design_members(wide), {1.0, 1.0}) ==
          doctest::Approx(1.517759296180281).epsilon(1e-10));
}

TEST_CASE_FIXTURE(Fixture, "progression trace of the reference frame") {
    const auto rows = progression_trace(s, d, {1.0, 1.0});
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].n_fc == 1);
    CHECK(rows[1].n_fc == 3);
    CHECK(rows[2].n_fc == 5);
    CHECK(rows[3].n_fc == 7);
    CHECK(rows[0].chain_probability == 1.0);
    CHECK(rows[1].chain_cumulative == doctest::Approx(rows[0].p_PL * rows[1].p_PL));
    CHECK(rows[2].chain_two_factor == doctest::Approx(rows[1].p_PL * rows[2].p_PL));
    CHECK(rows[2].chain_cumulative == doctest::Approx(rows[0].p_PL * rows[1].p_PL * rows[2].p_PL));
    // Later stages take the local pancake cost unweighted.
    CHECK(rows[1].stage_cost >= rows[1].c_PL);
    double largest = 0.0;
    for (const auto& r : rows) largest = std::max(largest, r.stage_expected_cost);
    const ExpectedCostTerms t = expected_cost_terms(s, d, {1.0, 1.0});
    CHECK(t.damage_max == doctest::Approx(largest));
    CHECK(t.dominant.n_fc == 7);
    CHECK(t.dominant.progressive);
}

TEST_CASE_FIXTURE(Fixture, "expected cost terms add up") {
    const ExpectedCostTerms t = expected_cost_terms(s, d, {0.9, 1.3});
    CHECK(t.total == doctest::Approx(t.construction + t.intact_bending + t.intact_pancake +
                                     t.p_LD * (t.initial_damage + t.damage_max)));
    CHECK(t.construction == doctest::Approx(construction_cost(s, d, {0.9, 1.3})));
}

TEST_CASE_FIXTURE(Fixture, "stage maximum ties resolve in mode order") {
    const ExpectedCostModel m(s, d);
    const StageCost a = m.stage({0.0, 0.0, 0.0}, 1, true);
    CHECK(a.term == StageTerm::Bending);
    CHECK(a.value == 0.0);
    CHECK(to_string(StageTerm::GlobalPancake) == "global-pancake");
}

TEST_CASE_FIXTURE(Fixture, "expected cost properties over sampled points") {
    const ExpectedCostModel m(s, d);
    const double bound = initial_damage_cost(s) + s.costs.k_brittle * construction_cost(s, d, {1.0, 1.0});
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> lam(0.1, 4.0), logp(-6.0, 0.0);
    for (int i = 0; i < 500; ++i) {
        const DesignFactors f{lam(rng), lam(rng)};
        double p1 = std::pow(10.0, logp(rng)), p2 = std::pow(10.0, logp(rng));
        if (p1 > p2) std::swap(p1, p2);
        const ExpectedCostTerms t1 = m.terms(f, p1);
        const ExpectedCostTerms t2 = m.terms(f, p2);
        REQUIRE(t1.total >= t1.construction);
        REQUIRE(t2.total >= t1.total);
        REQUIRE(t2.damage_bracket() <= bound);
    }
}

TEST_CASE_FIXTURE(Fixture, "catenary settings choose the bending modes") {
    CHECK(damaged_bending_mode(s) == CollapseMode::Bending);
    s.catenary = CatenaryUse::DamagedOnly;
    CHECK(damaged_bending_mode(s) == CollapseMode::Catenary);
    CHECK(intact_bending_mode(s) == CollapseMode::Bending);
    s.catenary = CatenaryUse::Full;
    CHECK(intact_bending_mode(s) == CollapseMode::Catenary);
    const double with = total_expected_cost(s, d, {1.0, 1.0});
    s.catenary = CatenaryUse::Off;
    CHECK(with < total_expected_cost(s, d, {1.0, 1.0}));
}

TEST_CASE_FIXTURE(Fixture, "no initial damage is rejected") {
    s.damage = {0, 0};
    CHECK_THROWS_AS(ExpectedCostModel(s, d), DomainError);
}
