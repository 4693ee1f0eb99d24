#include <cmath>

#include "doctest.h"
#include "riskframe/csv.hpp"
#include "riskframe/scenario_io.hpp"
#include "riskframe/svg.hpp"

using namespace riskframe;

TEST_CASE("empty document gives the reference scenario") {
    const Scenario s = parse_scenario_text("{}");
    const Scenario r = Scenario::reference();
    CHECK(s.geometry.n_s == r.geometry.n_s);
    CHECK(s.geometry.n_c == r.geometry.n_c);
    CHECK(s.p_LD == r.p_LD);
    CHECK(s.loads.beam_resistance.std == r.loads.beam_resistance.std);
    CHECK(scenario_to_json(s) == scenario_to_json(r));
}

TEST_CASE("partial documents override only what they name") {
    const Scenario s = parse_scenario_text(R"({"geometry": {"n_s": 16, "n_c": 5}})");
    CHECK(s.geometry.n_s == 16);
    CHECK(s.geometry.n_c == 5);
    CHECK(s.geometry.L == 6.0);

    const Scenario t = parse_scenario_text(
        R"({"loads": {"D_n": 2.0, "beam_resistance": {"std": 0.25}}, "costs": {"n_reinf_s": "all"},
            "catenary": "damaged", "chain_weighting": "two-factor"})");
    CHECK(t.loads.dead.mean == doctest::Approx(2.1));
    CHECK(t.loads.beam_resistance.mean == 1.22);
    CHECK(t.loads.beam_resistance.std == 0.25);
    CHECK(t.costs.n_reinf_s == 8);
    CHECK(t.catenary == CatenaryUse::DamagedOnly);
    CHECK(t.chain == ChainWeighting::TwoFactor);
}

TEST_CASE("scenario documents round-trip") {
    Scenario s = Scenario::reference();
    s.geometry.n_s = 5;
    s.geometry.n_c = 14;
    s.damage = {2, 1};
    s.costs.alpha_B = 0.5;
    s.catenary = CatenaryUse::Full;
    const std::string text = scenario_to_json(s);
    CHECK(scenario_to_json(parse_scenario_text(text)) == text);
}

TEST_CASE("bad scenario documents") {
    CHECK_THROWS_AS(parse_scenario_text(R"({"psi": 9})"), ValidationError);
    CHECK_THROWS_AS(parse_scenario_text(R"({"bogus": 1})"), ParseError);
    CHECK_THROWS_AS(parse_scenario_text(R"({"geometry": {"n_s": 8, "stories": 3}})"), ParseError);
    CHECK_THROWS_AS(parse_scenario_text(R"({"geometry": {"n_s": 2.5}})"), ParseError);
    CHECK_THROWS_AS(parse_scenario_text(R"({"p_LD": "high"})"), ParseError);
    CHECK_THROWS_AS(parse_scenario_text(R"({"catenary": "sometimes"})"), ParseError);
    CHECK_THROWS_AS(parse_scenario_text("{ not json"), ParseError);
    CHECK_THROWS_AS(parse_scenario_text("[]"), ParseError);
    CHECK_THROWS_AS(parse_scenario("/nonexistent/scenario.json"), ParseError);
    try {
        parse_scenario_text(R"({"costs": {"k_brittle": 40, "k_britle": 40}})");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("costs.k_britle") != std::string::npos);
    }
}

TEST_CASE("frame and damage tags") {
    const FrameGeometry g = frame_from_tag("4x16");
    CHECK(g.n_s == 4);
    CHECK(g.n_c == 17);
    CHECK(frame_tag(g) == "4x16");
    const DamageScenario d = damage_from_tag("3x2");
    CHECK(d.n_rc0 == 3);
    CHECK(d.n_rs0 == 2);
    CHECK_THROWS_AS(frame_from_tag("8by8"), ParseError);
    CHECK_THROWS_AS(frame_from_tag("0x8"), ParseError);
    CHECK_THROWS_AS(damage_from_tag("1x"), ParseError);
}

TEST_CASE("csv quoting and number formatting") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_escape("two\nlines") == "\"two\nlines\"");
    CHECK(format_number(1.0 / 3.0) == "0.333333");
    CHECK(format_number(1234567.0) == "1.23457e+06");
    CHECK(format_number(2.0) == "2");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(format_number(-HUGE_VAL) == "-inf");

    CsvTable t({"name", "value", "count"});
    t.add_row({std::string("x,y"), 0.5, 3});
    CHECK(t.str() == "name,value,count\n\"x,y\",0.5,3\n");
    CHECK_THROWS_AS(t.add_row({1.0}), Error);
    CHECK(CsvTable({"a", "b"}).str() == "a,b\n");
}

TEST_CASE("svg charts") {
    ChartOptions opt;
    opt.title = "A & B";
    opt.log_x = true;
    const ChartSeries one{"single", {{1e-3, 1.0}}};
    const ChartSeries bad{"bad", {{0.0, 1.0}, {1e-2, std::nan("")}, {1e-1, 2.0}, {1.0, 3.0}}};
    const Chart c = line_chart({one, bad}, opt);
    CHECK(c.dropped_points == 2);
    CHECK(c.svg.rfind("<?xml", 0) == 0);
    CHECK(c.svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(c.svg.find("<circle") != std::string::npos);
    CHECK(c.svg.find("<polyline") != std::string::npos);
    CHECK(c.svg.find("A &amp; B") != std::string::npos);
    CHECK(c.svg.find("single") != std::string::npos);
    CHECK(line_chart({one, bad}, opt).svg == c.svg);

    const Chart empty = line_chart({}, ChartOptions{});
    CHECK(empty.svg.find("</svg>") != std::string::npos);
}
