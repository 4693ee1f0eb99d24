#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "reference_tables.hpp"
#include "riskframe/cost.hpp"
#include "riskframe/scenario_io.hpp"
#include "riskframe/study.hpp"

namespace riskframe::cli {

namespace {

struct ScenarioFlags {
    std::string scenario_path;
    std::string frame;
    std::string damage;
    std::optional<double> p_ld;
    std::optional<double> psi;
    std::string catenary;
    std::string chain;

    void attach(CLI::App* app) {
        app->add_option("--scenario", scenario_path, "scenario JSON file");
        app->add_option("--frame", frame, "frame as STORIESxBAYS, e.g. 8x8");
        app->add_option("--damage", damage, "initial damage as COLUMNSxSTORIES, e.g. 1x1");
        app->add_option("--p-ld", p_ld, "50-year local damage probability");
        app->add_option("--psi", psi, "catenary parameter");
        app->add_option("--catenary", catenary, "off, damaged or full");
        app->add_option("--chain", chain, "cumulative or two-factor");
    }

    Scenario build() const {
        Scenario s = scenario_path.empty() ? Scenario::reference() : parse_scenario(scenario_path);
        if (!frame.empty()) {
            const FrameGeometry g = frame_from_tag(frame);
            s.geometry.n_s = g.n_s;
            s.geometry.n_c = g.n_c;
        }
        if (!damage.empty()) s.damage = damage_from_tag(damage);
        if (p_ld) s.p_LD = *p_ld;
        if (psi) s.psi = *psi;
        if (!catenary.empty()) s.catenary = catenary_from_string(catenary);
        if (!chain.empty()) s.chain = chain_from_string(chain);
        return validate(s);
    }
};

std::string num(double v) { return format_number(v); }

std::string fixed3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

void kv(std::ostream& out, const std::string& key, const std::string& value) {
    out << key << " = " << value << '\n';
}

void print_betas(std::ostream& out, const std::string& prefix, const BetaSet& b) {
    kv(out, prefix + "beta_B", num(b.beta_B));
    if (b.beta_PL) kv(out, prefix + "beta_PL", num(*b.beta_PL));
    kv(out, prefix + "beta_PG", num(b.beta_PG));
    if (b.beta_cat) kv(out, prefix + "beta_cat", num(*b.beta_cat));
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path);
    f << text;
}

int cmd_design(const Scenario& s, std::ostream& out, std::ostream& err) {
    const MemberDesign d = design_members(s);
    kv(out, "frame", frame_tag(s.geometry));
    kv(out, "damage", std::to_string(s.damage.n_rc0) + "x" + std::to_string(s.damage.n_rs0));
    kv(out, "B_y_nlc", num(d.B_y_nlc));
    kv(out, "R_c_nlc", num(d.R_c_nlc));
    kv(out, "B_y_0", num(d.B_y_0));
    kv(out, "R_c_0", num(d.R_c_0));
    kv(out, "B_sf", num(d.B_sf));
    kv(out, "R_sf", num(d.R_sf));
    kv(out, "C_const(1,1)", num(construction_cost(s, d, DesignFactors{1.0, 1.0})));
    for (const auto& w : design_warnings(d)) err << "warning: " << w << '\n';
    return Ok;
}

int cmd_beta(const Scenario& s, const DesignFactors& f, std::ostream& out) {
    const MemberDesign d = design_members(s);
    const MemberDesign nlc = unstrengthened(d);
    CsvTable t({"horizon", "mode", "nlc", "strengthened", "damaged"});
    for (auto [h, name] : {std::pair{Horizon::ArbitraryPointInTime, "apt"}, {Horizon::FiftyYear, "50"}}) {
        const BetaSet a = intact_betas(s, nlc, DesignFactors{1.0, 1.0}, h);
        const BetaSet b = intact_betas(s, d, f, h);
        const BetaSet c = damaged_betas(s, d, f, s.damage.n_rc0, s.damage.n_rs0, h);
        t.add_row({name, "global-pancake", a.beta_PG, b.beta_PG, c.beta_PG});
        t.add_row({name, "local-pancake", std::string(), std::string(), *c.beta_PL});
        t.add_row({name, "bending", a.beta_B, b.beta_B, c.beta_B});
        t.add_row({name, "catenary", *a.beta_cat, *b.beta_cat, *c.beta_cat});
    }
    out << t.str();
    return Ok;
}

int cmd_evaluate(Scenario s, const DesignFactors& f, bool normal, std::ostream& out) {
    MemberDesign d = design_members(s);
    if (normal) std::tie(s, d) = normal_frame(s, d);
    const ExpectedCostTerms t = expected_cost_terms(s, d, f);
    kv(out, "lambda_B", num(f.lambda_B));
    kv(out, "lambda_C", num(f.lambda_C));
    kv(out, "C_const", num(t.construction));
    kv(out, "intact_bending", num(t.intact_bending));
    kv(out, "intact_pancake", num(t.intact_pancake));
    kv(out, "C_ID", num(t.initial_damage));
    kv(out, "damage_max", num(t.damage_max));
    kv(out, "dominant", std::string(to_string(t.dominant.term)) + " at n_fc=" +
                            std::to_string(t.dominant.n_fc) +
                            (t.dominant.progressive ? " (progressive)" : ""));
    kv(out, "p_LD", num(t.p_LD));
    kv(out, "damage_bracket", num(t.damage_bracket()));
    kv(out, "C_TE", num(t.total));
    return Ok;
}

int cmd_trace(const Scenario& s, const DesignFactors& f, const std::string& path, std::ostream& out) {
    const MemberDesign d = design_members(s);
    CsvTable t({"n_fc", "p_B", "p_PL", "p_PG", "c_B", "c_PL", "c_PG", "chain_two_factor", "chain_cumulative",
                "chain_probability", "stage_cost", "stage_term", "stage_expected_cost"});
    for (const auto& r : progression_trace(s, d, f))
        t.add_row({r.n_fc, r.p_B, r.p_PL, r.p_PG, r.c_B, r.c_PL, r.c_PG, r.chain_two_factor,
                   r.chain_cumulative, r.chain_probability, r.stage_cost, std::string(to_string(r.stage_term)),
                   r.stage_expected_cost});
    write_text(path, t.str(), out);
    return Ok;
}

int cmd_optimize(const Scenario& s, std::ostream& out) {
    const OptimizationResult r = minimize_total_cost(s, design_members(s));
    kv(out, "p_LD", num(s.p_LD));
    kv(out, "lambda_B*", fixed3(r.lambda_star.lambda_B));
    kv(out, "lambda_C*", fixed3(r.lambda_star.lambda_C));
    kv(out, "C_TE*", num(r.c_te_star));
    kv(out, "beta_B_objective", num(r.beta_B_objective));
    print_betas(out, "damaged.", r.damaged_betas);
    print_betas(out, "intact50.", r.intact_betas);
    kv(out, "starts", std::to_string(r.starts_used));
    kv(out, "evaluations", std::to_string(r.evaluations));
    kv(out, "converged", r.converged ? "yes" : "no");
    return Ok;
}

int cmd_threshold(const Scenario& s, std::ostream& out) {
    const ThresholdResult r = threshold_probability(s, design_members(s));
    kv(out, "status", std::string(to_string(r.status)));
    if (r.status == ThresholdStatus::Bracketed) kv(out, "p_LD_th", num(r.p_LD_th));
    kv(out, "bracket_log10", "[" + num(r.log10_lo) + ", " + num(r.log10_hi) + "]");
    kv(out, "beta_B_at_bracket", "[" + num(r.beta_at_lo) + ", " + num(r.beta_at_hi) + "]");
    kv(out, "optimizations", std::to_string(r.optimizations));
    kv(out, "C_TE_strengthened(1,1)", num(r.c_te_strengthened));
    kv(out, "C_TE_normal(1,1)", num(r.c_te_normal));
    return Ok;
}

int cmd_sweep(const std::string& study_path, const std::string& catalog, const std::string& out_dir,
              unsigned jobs, std::ostream& out, std::ostream& err) {
    if (study_path.empty() == catalog.empty()) {
        err << "sweep: give exactly one of --study or --catalog (catalogs:";
        for (const auto& n : catalog_names()) err << ' ' << n;
        err << ")\n";
        return Usage;
    }
    StudyDefinition study = study_path.empty() ? catalog_study(catalog) : parse_study(study_path);
    if (!out_dir.empty()) study.output_dir = out_dir;
    const auto results = run_study(study, jobs);
    int failed = 0;
    for (const auto& r : results)
        if (!r.error.empty()) {
            ++failed;
            err << "point";
            for (const auto& l : r.point.labels) err << " [" << l << "]";
            err << ": " << r.error << '\n';
        }
    for (const auto& [name, chart] : study_charts(study, results))
        if (chart.dropped_points > 0)
            err << "warning: " << name << ": " << chart.dropped_points << " non-finite points dropped\n";
    for (const auto& p : write_study_outputs(study, results)) out << "wrote " << p.string() << '\n';
    out << results.size() << " points, " << failed << " failed\n";
    return failed ? DataError : Ok;
}

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Risk-based optimal design of regular plane frames under column loss", "riskframe"};
    app.require_subcommand(1);

    ScenarioFlags flags;
    double lambda_B = 1.0, lambda_C = 1.0;
    bool normal = false;
    std::string out_path, study_path, catalog;
    unsigned jobs = 0;

    auto with_lambda = [&](CLI::App* sub) {
        sub->add_option("--lambda-b", lambda_B, "beam design factor")->capture_default_str();
        sub->add_option("--lambda-c", lambda_C, "column design factor")->capture_default_str();
    };

    auto* design = app.add_subcommand("design", "member capacities and strengthening factors");
    auto* beta = app.add_subcommand("beta", "reliability index grid at the given design factors");
    auto* evaluate = app.add_subcommand("evaluate", "total expected cost with its terms");
    auto* trace = app.add_subcommand("trace", "progressive collapse chain as CSV");
    auto* optimize = app.add_subcommand("optimize", "optimal design factors");
    auto* threshold = app.add_subcommand("threshold", "threshold local damage probability");
    auto* sweep = app.add_subcommand("sweep", "run a parameter study");
    auto* tables = app.add_subcommand("reference-tables", "write reference-frame tables and charts");

    for (auto* sub : {design, beta, evaluate, trace, optimize, threshold}) flags.attach(sub);
    for (auto* sub : {beta, evaluate, trace}) with_lambda(sub);
    evaluate->add_flag("--normal", normal, "evaluate the frame designed for normal loading only");
    trace->add_option("--out", out_path, "output CSV (default stdout)");
    sweep->add_option("--study", study_path, "study definition JSON");
    sweep->add_option("--catalog", catalog, "built-in study name");
    sweep->add_option("--out", out_path, "output directory (overrides the study)");
    sweep->add_option("--jobs", jobs, "worker threads (default: hardware threads)");
    tables->add_option("--out", out_path, "output directory (default reference-tables)");
    tables->add_option("--jobs", jobs, "worker threads (default: hardware threads)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? Ok : Usage;
    }

    try {
        const DesignFactors f{lambda_B, lambda_C};
        if (*design) return cmd_design(flags.build(), out, err);
        if (*beta) return cmd_beta(flags.build(), f, out);
        if (*evaluate) return cmd_evaluate(flags.build(), f, normal, out);
        if (*trace) return cmd_trace(flags.build(), f, out_path, out);
        if (*optimize) return cmd_optimize(flags.build(), out);
        if (*threshold) return cmd_threshold(flags.build(), out);
        if (*sweep) return cmd_sweep(study_path, catalog, out_path, jobs, out, err);
        if (*tables) {
            const std::string dir = out_path.empty() ? "reference-tables" : out_path;
            for (const auto& p : tables::write_all(dir, jobs)) out << "wrote " << p.string() << '\n';
            return Ok;
        }
    } catch (const ValidationError& e) {
        for (const auto& v : e.violations()) err << "error: " << v.field << ": " << v.message << '\n';
        return DataError;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return NumericalFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return DataError;
    }
    return Usage;
}

}  // namespace riskframe::cli
