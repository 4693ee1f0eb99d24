#include <random>

#include "doctest.h"
#include "riskframe/reliability.hpp"

using namespace riskframe;

TEST_CASE("standard normal CDF against high-precision values") {
    // 30-digit reference values, rounded to 17 significant digits.
    const std::pair<double, double> table[] = {
        {-8.0, 6.2209605742717841e-16}, {-5.0, 2.8665157187919391e-7},
        {-3.0, 0.0013498980316300945},  {-1.5, 0.066807201268858066},
        {-0.5, 0.3085375387259869},     {0.0, 0.5},
        {0.25, 0.59870632568292372},    {1.0, 0.84134474606854295},
        {2.5, 0.99379033467422386},     {4.0, 0.99996832875816688},
    };
    for (auto [x, p] : table) CHECK(std_normal_cdf(x) == doctest::Approx(p).epsilon(1e-13));
    CHECK(std_normal_cdf(-60.0) == 0.0);
    CHECK(std_normal_cdf(60.0) == 1.0);
    CHECK_THROWS_AS(std_normal_cdf(std::nan("")), DomainError);
}

TEST_CASE("Cornell index by hand") {
    const RandomVarStats R{1.2, 0.22}, D{1.05, 0.105}, L{0.25, 0.1375};
    const double r = 2.0;
    const double expected = (2.4 - 1.3) / std::sqrt(4.0 * 0.0484 + 0.011025 + 0.01890625);
    CHECK(cornell_beta(r, R, D, L) == doctest::Approx(expected));
    CHECK_THROWS_AS(cornell_beta(0.0, R, D, L), DomainError);
    const RandomVarStats z{1.0, 0.0};
    CHECK_THROWS_AS(cornell_beta(1.0, z, z, z), DomainError);
}

TEST_CASE("reference reliability indexes") {
    const Scenario s = Scenario::reference();
    const MemberDesign d = design_members(s);
    const MemberDesign nlc = unstrengthened(d);
    const DesignFactors unit{1.0, 1.0};
    using H = Horizon;
    struct Cell { double got, expected; };
    const BetaSet a_apt = intact_betas(s, nlc, unit, H::ArbitraryPointInTime);
    const BetaSet a_50 = intact_betas(s, nlc, unit, H::FiftyYear);
    const BetaSet b_apt = intact_betas(s, d, unit, H::ArbitraryPointInTime);
    const BetaSet b_50 = intact_betas(s, d, unit, H::FiftyYear);
    const BetaSet c_apt = damaged_betas(s, d, unit, 1, 1, H::ArbitraryPointInTime);
    const BetaSet c_50 = damaged_betas(s, d, unit, 1, 1, H::FiftyYear);
    const BetaSet o_apt = damaged_betas(s, d, {0.9, 1.3}, 1, 1, H::ArbitraryPointInTime);
    const BetaSet o_50 = damaged_betas(s, d, {0.9, 1.3}, 1, 1, H::FiftyYear);
    const Cell cells[] = {
        {a_apt.beta_PG, 3.56}, {b_apt.beta_PG, 3.82}, {c_apt.beta_PG, 3.46}, {o_apt.beta_PG, 3.93},
        {*c_apt.beta_PL, 1.80}, {*o_apt.beta_PL, 2.62},
        {a_apt.beta_B, 3.99}, {b_apt.beta_B, 5.10}, {c_apt.beta_B, 2.03}, {o_apt.beta_B, 1.61},
        {*a_apt.beta_cat, 4.42}, {*b_apt.beta_cat, 5.31}, {*c_apt.beta_cat, 3.36},
        {a_50.beta_PG, 2.46}, {b_50.beta_PG, 2.85}, {c_50.beta_PG, 2.30}, {o_50.beta_PG, 3.03},
        {*c_50.beta_PL, -0.02}, {*o_50.beta_PL, 1.08},
        {a_50.beta_B, 2.76}, {b_50.beta_B, 4.50}, {c_50.beta_B, 0.06}, {o_50.beta_B, -0.45},
        {*a_50.beta_cat, 3.43}, {*b_50.beta_cat, 4.83}, {*c_50.beta_cat, 1.84},
    };
    for (const auto& c : cells) CHECK(std::abs(c.got - c.expected) < 0.02);
    CHECK_FALSE(a_apt.beta_PL.has_value());
}

TEST_CASE("reliability increases strictly with the design factors") {
    const Scenario s = Scenario::reference();
    const MemberDesign d = design_members(s);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> lam(0.1, 4.0);
    for (int i = 0; i < 1000; ++i) {
        double a = lam(rng), b = lam(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        REQUIRE(beta_damaged(s, d, {a, 1.0}, 1, 1, CollapseMode::Bending) <
                beta_damaged(s, d, {b, 1.0}, 1, 1, CollapseMode::Bending));
        REQUIRE(beta_damaged(s, d, {1.0, a}, 1, 1, CollapseMode::LocalPancake) <
                beta_damaged(s, d, {1.0, b}, 1, 1, CollapseMode::LocalPancake));
        REQUIRE(beta_damaged(s, d, {1.0, a}, 1, 1, CollapseMode::GlobalPancake) <
                beta_damaged(s, d, {1.0, b}, 1, 1, CollapseMode::GlobalPancake));
        REQUIRE(beta_intact(s, d, {a, 1.0}, CollapseMode::Bending) <
                beta_intact(s, d, {b, 1.0}, CollapseMode::Bending));
    }
}

TEST_CASE("catenary raises the bending index") {
    const Scenario s = Scenario::reference();
    const MemberDesign d = design_members(s);
    CHECK(beta_damaged(s, d, {1, 1}, 1, 1, CollapseMode::Catenary) >
          beta_damaged(s, d, {1, 1}, 1, 1, CollapseMode::Bending));
    CHECK_THROWS_AS(beta_intact(s, d, {1, 1}, CollapseMode::LocalPancake), DomainError);
}
