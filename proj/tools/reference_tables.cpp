#include "reference_tables.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <thread>

#include "riskframe/scenario_io.hpp"
#include "riskframe/study.hpp"

namespace riskframe::tables {

namespace {

template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, Fn fn) {
    std::vector<T> out(n);
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(n, 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) out[i] = fn(i);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

Scenario frame_scenario(const FrameGeometry& g) {
    Scenario s = Scenario::reference();
    s.geometry.n_s = g.n_s;
    s.geometry.n_c = g.n_c;
    return s;
}

std::string damage_tag(const DamageScenario& d) {
    return std::to_string(d.n_rc0) + "x" + std::to_string(d.n_rs0);
}

}  // namespace

ReliabilityTable reliability_table(const DesignFactors& optimized) {
    const Scenario s = Scenario::reference();
    const MemberDesign d = design_members(s);
    const MemberDesign nlc = unstrengthened(d);
    const DesignFactors unit{1.0, 1.0};

    Scenario cat = s;
    cat.catenary = CatenaryUse::DamagedOnly;
    ReliabilityTable t;
    t.catenary_optimum = minimize_total_cost(cat, d).lambda_star;

    const int n_rc = s.damage.n_rc0, n_rs = s.damage.n_rs0;
    for (auto [horizon, name] : {std::pair{Horizon::ArbitraryPointInTime, "apt"}, {Horizon::FiftyYear, "50"}}) {
        const BetaSet a = intact_betas(s, nlc, unit, horizon);
        const BetaSet b = intact_betas(s, d, unit, horizon);
        const BetaSet c = damaged_betas(s, d, unit, n_rc, n_rs, horizon);
        const BetaSet o = damaged_betas(s, d, optimized, n_rc, n_rs, horizon);
        const BetaSet oc = damaged_betas(s, d, t.catenary_optimum, n_rc, n_rs, horizon);
        t.rows.push_back({name, "global-pancake", a.beta_PG, b.beta_PG, c.beta_PG, o.beta_PG, true, optimized});
        t.rows.push_back({name, "local-pancake", 0.0, 0.0, *c.beta_PL, *o.beta_PL, false, optimized});
        t.rows.push_back({name, "bending", a.beta_B, b.beta_B, c.beta_B, o.beta_B, true, optimized});
        t.rows.push_back({name, "catenary", *a.beta_cat, *b.beta_cat, *c.beta_cat, *oc.beta_cat, true,
                          t.catenary_optimum});
    }
    return t;
}

CsvTable reliability_table_csv(const ReliabilityTable& t) {
    CsvTable csv({"horizon", "mode", "nlc", "strengthened", "damaged", "optimized", "optimized_lambda_B",
                  "optimized_lambda_C"});
    for (const auto& r : t.rows) {
        const CsvCell blank = std::string();
        csv.add_row({r.horizon, r.mode, r.intact_defined ? CsvCell(r.nlc) : blank,
                     r.intact_defined ? CsvCell(r.strengthened) : blank, r.damaged, r.optimized,
                     r.optimized_lambda.lambda_B, r.optimized_lambda.lambda_C});
    }
    return csv;
}

std::vector<StrengtheningEntry> strengthening_table() {
    std::vector<StrengtheningEntry> out;
    for (const auto& g : standard_frames()) {
        for (DamageScenario dmg : {DamageScenario{1, 1}, {1, 0}, {2, 1}, {3, 2}}) {
            Scenario s = frame_scenario(g);
            s.damage = dmg;
            const MemberDesign d = design_members(s);
            out.push_back({frame_tag(g), damage_tag(dmg), d.B_sf, d.R_sf});
        }
    }
    return out;
}

CsvTable strengthening_table_csv(const std::vector<StrengtheningEntry>& entries) {
    CsvTable csv({"frame", "damage", "B_sf", "R_sf"});
    for (const auto& e : entries) csv.add_row({e.frame, e.damage, e.B_sf, e.R_sf});
    return csv;
}

std::vector<double> figure_p_grid() {
    std::vector<double> p;
    for (int k = 0; k <= 12; ++k) p.push_back(std::pow(10.0, -6.0 + 0.5 * k));
    return p;
}

std::vector<FigurePoint> p_ld_curves(unsigned jobs) {
    const auto frames = standard_frames();
    const auto grid = figure_p_grid();
    return parallel_map<FigurePoint>(frames.size() * grid.size(), jobs, [&](std::size_t i) {
        const auto& g = frames[i / grid.size()];
        const double p = grid[i % grid.size()];
        const Scenario s = frame_scenario(g);
        const ExpectedCostModel model(s, design_members(s));
        return FigurePoint{frame_tag(g), p, minimize_total_cost(model, p)};
    });
}

CsvTable p_ld_curves_csv(const std::vector<FigurePoint>& points) {
    CsvTable csv({"frame", "p_LD", "lambda_B", "lambda_C", "C_TE", "beta_B", "beta_PL", "beta_PG"});
    for (const auto& pt : points) {
        const auto& o = pt.optimum;
        csv.add_row({pt.frame, pt.p_LD, o.lambda_star.lambda_B, o.lambda_star.lambda_C, o.c_te_star,
                     o.beta_B_objective, o.damaged_betas.beta_PL.value_or(std::nan("")),
                     o.damaged_betas.beta_PG});
    }
    return csv;
}

std::vector<ThresholdEntry> threshold_curve(unsigned jobs) {
    const auto frames = standard_frames();
    return parallel_map<ThresholdEntry>(frames.size(), jobs, [&](std::size_t i) {
        const Scenario s = frame_scenario(frames[i]);
        return ThresholdEntry{frame_tag(frames[i]), threshold_probability(s, design_members(s))};
    });
}

CsvTable threshold_curve_csv(const std::vector<ThresholdEntry>& entries) {
    CsvTable csv({"frame", "status", "p_LD_th", "log10_lo", "log10_hi", "c_te_strengthened", "c_te_normal"});
    for (const auto& e : entries) {
        const auto& r = e.result;
        const bool bracketed = r.status == ThresholdStatus::Bracketed;
        csv.add_row({e.frame, std::string(to_string(r.status)),
                     bracketed ? CsvCell(r.p_LD_th) : CsvCell(std::string()), r.log10_lo, r.log10_hi,
                     r.c_te_strengthened, r.c_te_normal});
    }
    return csv;
}

std::vector<std::filesystem::path> write_all(const std::filesystem::path& dir, unsigned jobs) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> written;
    auto write = [&](const std::string& name, const std::string& content) {
        const auto path = dir / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("cannot write " + path.string());
        out << content;
        written.push_back(path);
    };

    write("reliability_indexes.csv", reliability_table_csv(reliability_table()).str());
    write("strengthening_factors.csv", strengthening_table_csv(strengthening_table()).str());
    const auto curves = p_ld_curves(jobs);
    write("optimum_vs_p_ld.csv", p_ld_curves_csv(curves).str());
    const auto thresholds = threshold_curve(jobs);
    write("thresholds.csv", threshold_curve_csv(thresholds).str());

    // Tall and low frames against the local damage probability.
    const std::vector<std::string> shown{"16x4", "4x16"};
    std::vector<ChartSeries> lambdas, betas;
    for (const auto& f : shown) {
        ChartSeries lb{f + " lambda_B*", {}}, lc{f + " lambda_C*", {}};
        ChartSeries bb{f + " beta_B*", {}}, bpl{f + " beta_PL*", {}}, bpg{f + " beta_PG*", {}};
        for (const auto& pt : curves) {
            if (pt.frame != f) continue;
            lb.points.emplace_back(pt.p_LD, pt.optimum.lambda_star.lambda_B);
            lc.points.emplace_back(pt.p_LD, pt.optimum.lambda_star.lambda_C);
            bb.points.emplace_back(pt.p_LD, pt.optimum.beta_B_objective);
            bpl.points.emplace_back(pt.p_LD, pt.optimum.damaged_betas.beta_PL.value_or(std::nan("")));
            bpg.points.emplace_back(pt.p_LD, pt.optimum.damaged_betas.beta_PG);
        }
        lambdas.insert(lambdas.end(), {lb, lc});
        betas.insert(betas.end(), {bb, bpl, bpg});
    }
    ChartOptions opt;
    opt.log_x = true;
    opt.x_label = "p_LD";
    opt.title = "Optimal design factors";
    opt.y_label = "lambda*";
    write("design_factors.svg", line_chart(lambdas, opt).svg);
    opt.title = "Optimal reliability indexes given damage";
    opt.y_label = "beta*";
    write("damaged_betas.svg", line_chart(betas, opt).svg);

    ChartSeries th{"p_LD_th", {}};
    ChartOptions topt;
    topt.title = "Threshold local damage probability";
    topt.x_label = "frame (stories x bays)";
    topt.y_label = "log10 p_LD_th";
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        const auto& r = thresholds[i].result;
        th.points.emplace_back(static_cast<double>(i), r.status == ThresholdStatus::Bracketed
                                                           ? std::log10(r.p_LD_th)
                                                           : std::nan(""));
        topt.x_ticks.emplace_back(static_cast<double>(i), thresholds[i].frame);
    }
    write("thresholds.svg", line_chart({th}, topt).svg);
    return written;
}

}  // namespace riskframe::tables
