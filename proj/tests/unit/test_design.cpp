#include <cmath>

#include "doctest.h"
#include "riskframe/design.hpp"

using namespace riskframe;

TEST_CASE("reference member sizing") {
    const MemberDesign d = design_members(Scenario::reference());
    // L^2 / (16 * 0.85) * 2.8 and 6 * 8 * 8 / (0.85 * 9) * 2.8
    CHECK(d.B_y_nlc == doctest::Approx(36.0 * 2.8 / 13.6));
    CHECK(d.R_c_nlc == doctest::Approx(384.0 * 2.8 / 7.65));
    CHECK(d.B_y_0 == doctest::Approx(36.0 / 4.0 * 1.7));
    // 48 (2 - 8/9 + 7/8) * 1.7
    CHECK(d.R_c_0 == doctest::Approx(48.0 * (2.0 - 8.0 / 9.0 + 7.0 / 8.0) * 1.7));
    CHECK(std::abs(d.B_y_nlc - 7.41) < 0.05);
    CHECK(std::abs(d.R_c_nlc - 140.55) < 0.05);
    CHECK(std::abs(d.B_y_0 - 15.3) < 0.05);
    CHECK(std::abs(d.R_c_0 - 162.1) < 0.05);
    CHECK(d.B_sf == doctest::Approx(d.B_y_0 / d.B_y_nlc));
    CHECK(d.R_sf == doctest::Approx(d.R_c_0 / d.R_c_nlc));
    CHECK(design_warnings(d).empty());
}

TEST_CASE("tall frame normal column design") {
    Scenario s = Scenario::reference();
    s.geometry.n_s = 16;
    s.geometry.n_c = 5;
    const MemberDesign d = design_members(s);
    CHECK(d.R_c_nlc == doctest::Approx(253.0).epsilon(1e-3));
    CHECK(d.R_sf == doctest::Approx(1.38).epsilon(5e-3));
}

TEST_CASE("column strengthening never drops below the normal design") {
    Scenario s = Scenario::reference();
    s.geometry.n_s = 4;
    s.geometry.n_c = 17;
    const MemberDesign d = design_members(s);
    CHECK(d.R_c_0 == d.R_c_nlc);
    CHECK(d.R_sf == 1.0);
}

TEST_CASE("beam strengthening is proportional to the removed columns") {
    Scenario s = Scenario::reference();
    const double one = design_members(s).B_sf;
    s.damage = {3, 2};
    CHECK(design_members(s).B_sf == doctest::Approx(3.0 * one));
}

TEST_CASE("unstrengthened design and normal frame") {
    const Scenario s = Scenario::reference();
    const MemberDesign d = design_members(s);
    const MemberDesign u = unstrengthened(d);
    CHECK(u.B_y_0 == d.B_y_nlc);
    CHECK(u.R_c_0 == d.R_c_nlc);
    CHECK(u.B_sf == 1.0);
    CHECK(u.R_sf == 1.0);
    const auto [ns, nd] = normal_frame(s, d);
    CHECK(ns.costs.n_reinf_s == 0);
    CHECK(nd.B_sf == 1.0);
}

TEST_CASE("design preconditions") {
    Scenario s = Scenario::reference();
    s.damage = {0, 0};
    CHECK_THROWS_AS(design_members(s), DomainError);
    CHECK_THROWS_AS(design_nlc(FrameGeometry{}, s.loads, 0.0), DomainError);
    MemberDesign weak = design_members(Scenario::reference());
    weak.B_y_0 = 0.5 * weak.B_y_nlc;
    CHECK_FALSE(design_warnings(weak).empty());
}
