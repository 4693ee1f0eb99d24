#include "doctest.h"
#include "riskframe/optimize.hpp"

using namespace riskframe;

TEST_CASE("simplex finds the minimum of the Rosenbrock valley") {
    const auto f = [](const std::array<double, 2>& x) {
        return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
    };
    SimplexOptions opt;
    opt.x_tol = 1e-8;
    opt.f_tol = 1e-14;
    opt.max_evaluations = 20000;
    const auto r = nelder_mead(f, std::array<double, 2>{-1.2, 1.0}, opt);
    CHECK(r.converged);
    CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(r.x[1] == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("simplex treats non-finite values as infinitely bad") {
    const auto f = [](const std::array<double, 1>& x) {
        return x[0] < 0.0 ? std::nan("") : (x[0] - 2.0) * (x[0] - 2.0);
    };
    const auto r = nelder_mead(f, std::array<double, 1>{0.05});
    CHECK(r.x[0] == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("reference optimum") {
    const Scenario s = Scenario::reference();
    const MemberDesign d = design_members(s);
    const OptimizationResult r = minimize_total_cost(s, d);
    CHECK(std::abs(r.lambda_star.lambda_B - 0.9) < 0.1);
    CHECK(std::abs(r.lambda_star.lambda_C - 1.3) < 0.1);
    CHECK(r.c_te_star == doctest::Approx(total_expected_cost(s, d, r.lambda_star)));
    CHECK(r.starts_used == 26);
    CHECK(r.converged);
    CHECK(r.beta_B_objective == doctest::Approx(r.damaged_betas.beta_B));

    const OptimizationResult again = minimize_total_cost(s, d);
    CHECK(again.lambda_star.lambda_B == r.lambda_star.lambda_B);
    CHECK(again.lambda_star.lambda_C == r.lambda_star.lambda_C);
    CHECK(again.c_te_star == r.c_te_star);
}

TEST_CASE("optimum is no worse than a coarse grid") {
    const Scenario s = Scenario::reference();
    const MemberDesign d = design_members(s);
    const ExpectedCostModel m(s, d);
    const OptimizationResult r = minimize_total_cost(m, s.p_LD);
    double best = 1e300;
    for (int i = 0; i < 60; ++i)
        for (int j = 0; j < 60; ++j)
            best = std::min(best, m.total({0.1 + 2.9 * i / 59.0, 0.1 + 2.9 * j / 59.0}));
    CHECK(r.c_te_star <= best * (1.0 + 1e-3));
}

TEST_CASE("threshold probability of the low frame") {
    Scenario s = Scenario::reference();
    s.geometry.n_s = 4;
    s.geometry.n_c = 17;
    const ThresholdResult r = threshold_probability(s, design_members(s));
    REQUIRE(r.status == ThresholdStatus::Bracketed);
    CHECK(r.p_LD_th > 0.025);
    CHECK(r.p_LD_th < 0.10);
    CHECK(r.log10_hi - r.log10_lo <= 0.01 + 1e-12);
    CHECK((r.beta_at_lo < 0.0) != (r.beta_at_hi < 0.0));
    CHECK(to_string(r.status) == "bracketed");
}

TEST_CASE("catenary on the damaged frame removes the threshold") {
    Scenario s = Scenario::reference();
    s.catenary = CatenaryUse::DamagedOnly;
    const ThresholdResult r = threshold_probability(s, design_members(s));
    CHECK(r.status == ThresholdStatus::AlwaysStrengthen);
    CHECK(r.beta_at_lo > 0.0);
}

TEST_CASE("a narrow interval without a root reports never-strengthen") {
    Scenario s = Scenario::reference();
    ThresholdOptions opt;
    opt.log10_lo = -6.0;
    opt.log10_hi = -4.0;
    const ThresholdResult r = threshold_probability(s, design_members(s), opt);
    CHECK(r.status == ThresholdStatus::NeverStrengthen);
    CHECK(r.optimizations == 2);
}
