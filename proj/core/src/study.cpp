#include "riskframe/study.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "riskframe/cost.hpp"
#include "riskframe/scenario_io.hpp"

namespace riskframe {

using nlohmann::json;

namespace {

constexpr const char* kBays = "geometry.bays";

json::json_pointer pointer(const std::string& dotted) {
    std::string p;
    std::stringstream in(dotted);
    for (std::string part; std::getline(in, part, '.');) p += "/" + part;
    return json::json_pointer(p);
}

json full_document(const json& partial) {
    return json::parse(scenario_to_json(parse_scenario_unchecked(partial.dump())));
}

bool field_exists(const std::string& path) {
    if (path == kBays) return true;
    static const json reference = json::parse(scenario_to_json(Scenario::reference()));
    try {
        const auto& node = reference.at(pointer(path));
        return !node.is_object();
    } catch (const json::exception&) {
        return false;
    }
}

void apply(json& doc, const ScenarioPatch& patch) {
    json value = json::parse(patch.value_json);
    if (patch.op == ScenarioPatch::Op::Scale) {
        if (!value.is_number()) throw ParseError("scale factor for " + patch.path + " must be a number");
        const json full = full_document(doc);
        const double factor = value.get<double>();
        if (patch.path == kBays) {
            const int bays = full["geometry"]["n_c"].get<int>() - 1;
            value = static_cast<int>(std::lround(bays * factor));
        } else {
            const json& current = full.at(pointer(patch.path));
            if (!current.is_number()) throw ParseError(patch.path + " is not numeric");
            if (current.is_number_integer())
                value = static_cast<int>(std::lround(current.get<double>() * factor));
            else
                value = current.get<double>() * factor;
        }
    }
    if (patch.path == kBays) {
        if (!value.is_number_integer()) throw ParseError("geometry.bays must be an integer");
        doc[pointer("geometry.n_c")] = value.get<int>() + 1;
    } else {
        doc[pointer(patch.path)] = value;
    }
}

std::string value_label(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number()) return format_number(v.get<double>());
    return v.dump();
}

SweepAxis frame_axis(const std::vector<FrameGeometry>& frames) {
    SweepAxis axis{"frame", {}, false, false};
    for (const auto& g : frames)
        axis.variants.push_back({frame_tag(g),
                                 {{"geometry.n_s", ScenarioPatch::Op::Set, std::to_string(g.n_s)},
                                  {"geometry.n_c", ScenarioPatch::Op::Set, std::to_string(g.n_c)}}});
    return axis;
}

SweepAxis parameter_axis(const std::string& name, const std::string& path,
                         const std::vector<json>& values, bool log_scale) {
    SweepAxis axis{name, {}, true, log_scale};
    for (const auto& v : values) {
        if (!v.is_number()) axis.numeric = false;
        axis.variants.push_back({value_label(v), {{path, ScenarioPatch::Op::Set, v.dump()}}});
    }
    return axis;
}

ScenarioPatch set(const std::string& path, const json& value) {
    return {path, ScenarioPatch::Op::Set, value.dump()};
}

// Strict reader for the study document.
void reject_unknown(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
    if (!obj.is_object()) throw ParseError(where + " must be an object");
    std::set<std::string> known(keys.begin(), keys.end());
    for (const auto& item : obj.items())
        if (!known.count(item.key())) throw ParseError("unknown key " + where + "." + item.key());
}

SweepAxis parse_axis(const json& a, std::size_t index) {
    const std::string where = "axes[" + std::to_string(index) + "]";
    reject_unknown(a, {"name", "parameter", "values", "log", "variants", "frames"}, where);
    if (!a.contains("name") || !a["name"].is_string()) throw ParseError(where + ".name must be a string");
    const std::string name = a["name"].get<std::string>();
    const int forms = int(a.contains("parameter")) + int(a.contains("variants")) + int(a.contains("frames"));
    if (forms != 1) throw ParseError(where + " needs exactly one of parameter, variants, frames");

    if (a.contains("frames")) {
        if (!a["frames"].is_array()) throw ParseError(where + ".frames must be an array");
        std::vector<FrameGeometry> frames;
        for (const auto& f : a["frames"]) {
            if (!f.is_string()) throw ParseError(where + ".frames entries must be strings");
            frames.push_back(frame_from_tag(f.get<std::string>()));
        }
        SweepAxis axis = frame_axis(frames);
        axis.name = name;
        return axis;
    }
    if (a.contains("parameter")) {
        if (!a["parameter"].is_string()) throw ParseError(where + ".parameter must be a string");
        if (!a.contains("values") || !a["values"].is_array())
            throw ParseError(where + ".values must be an array");
        const bool log_scale = a.value("log", false);
        return parameter_axis(name, a["parameter"].get<std::string>(),
                              a["values"].get<std::vector<json>>(), log_scale);
    }
    if (!a["variants"].is_array()) throw ParseError(where + ".variants must be an array");
    SweepAxis axis{name, {}, false, false};
    std::size_t k = 0;
    for (const auto& v : a["variants"]) {
        const std::string vw = where + ".variants[" + std::to_string(k++) + "]";
        reject_unknown(v, {"label", "set", "scale"}, vw);
        if (!v.contains("label") || !v["label"].is_string()) throw ParseError(vw + ".label must be a string");
        AxisVariant variant{v["label"].get<std::string>(), {}};
        if (v.contains("set")) {
            if (!v["set"].is_object()) throw ParseError(vw + ".set must be an object");
            for (const auto& item : v["set"].items()) variant.patches.push_back(set(item.key(), item.value()));
        }
        if (v.contains("scale")) {
            if (!v["scale"].is_object()) throw ParseError(vw + ".scale must be an object");
            for (const auto& item : v["scale"].items())
                variant.patches.push_back({item.key(), ScenarioPatch::Op::Scale, item.value().dump()});
        }
        axis.variants.push_back(std::move(variant));
    }
    return axis;
}

StudyResult evaluate_point(const StudyDefinition& study, const StudyPoint& point) {
    StudyResult r;
    r.point = point;
    try {
        const Scenario s = parse_scenario_text(point.scenario_json);
        r.scenario = s;
        r.design = design_members(s);
        r.c_const_unit = construction_cost(s, r.design, DesignFactors{1.0, 1.0});
        if (study.optimize) r.optimum = minimize_total_cost(s, r.design, study.optimizer);
        if (study.threshold) r.threshold = threshold_probability(s, r.design, study.threshold_options);
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

std::string group_key(const StudyPoint& p) {
    std::string key;
    for (std::size_t i = 0; i + 1 < p.labels.size(); ++i) key += (i ? " / " : "") + p.labels[i];
    return key;
}

}  // namespace

void check_study(const StudyDefinition& study) {
    std::vector<Violation> v;
    try {
        const auto base = json::parse(study.base_json);
        if (!base.is_object()) v.push_back({"base", "base scenario must be an object"});
    } catch (const json::parse_error& e) {
        v.push_back({"base", std::string("malformed JSON: ") + e.what()});
    }
    for (std::size_t i = 0; i < study.axes.size(); ++i) {
        const auto& axis = study.axes[i];
        const std::string field = "axes[" + std::to_string(i) + "]";
        if (axis.variants.empty()) v.push_back({field, "axis '" + axis.name + "' has no values"});
        for (const auto& variant : axis.variants)
            for (const auto& patch : variant.patches)
                if (!field_exists(patch.path))
                    v.push_back({field, "unknown scenario field '" + patch.path + "'"});
    }
    if (!v.empty()) throw ValidationError(std::move(v));
}

std::vector<StudyPoint> expand(const StudyDefinition& study) {
    check_study(study);
    const json base = json::parse(study.base_json);
    std::vector<StudyPoint> points{{{}, {}, base.dump()}};
    for (const auto& axis : study.axes) {
        std::vector<StudyPoint> next;
        for (const auto& p : points) {
            for (std::size_t k = 0; k < axis.variants.size(); ++k) {
                const auto& variant = axis.variants[k];
                json doc = json::parse(p.scenario_json);
                for (const auto& patch : variant.patches) apply(doc, patch);
                StudyPoint q = p;
                q.labels.push_back(variant.label);
                double coord = static_cast<double>(k);
                if (axis.numeric) coord = json::parse(variant.patches.front().value_json).get<double>();
                q.coordinates.push_back(coord);
                q.scenario_json = doc.dump();
                next.push_back(std::move(q));
            }
        }
        points = std::move(next);
    }
    return points;
}

StudyDefinition parse_study_text(std::string_view json_text, const std::filesystem::path& base_dir) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    reject_unknown(doc, {"name", "base", "base_file", "axes", "optimize", "threshold", "output_dir", "emit"},
                   "study");
    StudyDefinition s;
    try {
        s.name = doc.value("name", s.name);
        s.optimize = doc.value("optimize", s.optimize);
        s.threshold = doc.value("threshold", s.threshold);
        if (doc.contains("output_dir")) {
            std::filesystem::path out = doc["output_dir"].get<std::string>();
            s.output_dir = out.is_relative() ? base_dir / out : out;
        }
        if (doc.contains("emit")) {
            reject_unknown(doc["emit"], {"csv", "svg"}, "study.emit");
            s.emit_csv = doc["emit"].value("csv", true);
            s.emit_svg = doc["emit"].value("svg", true);
        }
    } catch (const json::type_error& e) {
        throw ParseError(std::string("wrong type in study: ") + e.what());
    }
    if (doc.contains("base") && doc.contains("base_file"))
        throw ParseError("study takes base or base_file, not both");
    if (doc.contains("base")) {
        if (!doc["base"].is_object()) throw ParseError("study.base must be an object");
        s.base_json = doc["base"].dump();
    } else if (doc.contains("base_file")) {
        std::filesystem::path p = doc["base_file"].get<std::string>();
        if (p.is_relative()) p = base_dir / p;
        std::ifstream in(p);
        if (!in) throw ParseError("cannot open base scenario " + p.string());
        std::ostringstream buf;
        buf << in.rdbuf();
        s.base_json = buf.str();
    }
    if (doc.contains("axes")) {
        if (!doc["axes"].is_array()) throw ParseError("study.axes must be an array");
        for (std::size_t i = 0; i < doc["axes"].size(); ++i) s.axes.push_back(parse_axis(doc["axes"][i], i));
    }
    check_study(s);
    parse_scenario_text(s.base_json);
    return s;
}

StudyDefinition parse_study(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open study file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_study_text(buf.str(), path.parent_path());
}

std::vector<StudyResult> run_study(const StudyDefinition& study, unsigned jobs) {
    const auto points = expand(study);
    std::vector<StudyResult> results(points.size());
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(points.size(), 1)));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++)
            results[i] = evaluate_point(study, points[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return results;
}

CsvTable study_table(const StudyDefinition& study, const std::vector<StudyResult>& results) {
    std::vector<std::string> header{"study"};
    for (const auto& axis : study.axes) header.push_back(axis.name);
    for (const char* h : {"scenario_frame", "scenario_damage", "p_LD", "B_sf", "R_sf", "C_const_11"}) header.push_back(h);
    if (study.optimize)
        for (const char* h : {"lambda_B", "lambda_C", "C_TE", "beta_B", "beta_PL", "beta_PG", "beta_B50",
                              "beta_PG50", "converged"})
            header.push_back(h);
    if (study.threshold)
        for (const char* h : {"threshold_status", "p_LD_th"}) header.push_back(h);
    header.push_back("error");

    CsvTable table(header);
    for (const auto& r : results) {
        std::vector<CsvCell> row{study.name};
        for (const auto& l : r.point.labels) row.emplace_back(l);
        if (r.scenario) {
            const auto& s = *r.scenario;
            row.emplace_back(frame_tag(s.geometry));
            row.emplace_back(std::to_string(s.damage.n_rc0) + "x" + std::to_string(s.damage.n_rs0));
            row.emplace_back(s.p_LD);
            row.emplace_back(r.design.B_sf);
            row.emplace_back(r.design.R_sf);
            row.emplace_back(r.c_const_unit);
        }
        if (r.optimum) {
            const auto& o = *r.optimum;
            row.emplace_back(o.lambda_star.lambda_B);
            row.emplace_back(o.lambda_star.lambda_C);
            row.emplace_back(o.c_te_star);
            row.emplace_back(o.beta_B_objective);
            row.emplace_back(o.damaged_betas.beta_PL.value_or(std::nan("")));
            row.emplace_back(o.damaged_betas.beta_PG);
            row.emplace_back(o.intact_betas.beta_B);
            row.emplace_back(o.intact_betas.beta_PG);
            row.emplace_back(o.converged ? 1 : 0);
        }
        if (r.threshold) {
            row.emplace_back(std::string(to_string(r.threshold->status)));
            if (r.threshold->status == ThresholdStatus::Bracketed)
                row.emplace_back(r.threshold->p_LD_th);
            else
                row.emplace_back(std::string());
        }
        // Failed points keep their labels and leave the computed columns empty.
        while (row.size() + 1 < header.size()) row.emplace_back(std::string());
        row.emplace_back(r.error);
        table.add_row(std::move(row));
    }
    return table;
}

std::vector<std::pair<std::string, Chart>> study_charts(const StudyDefinition& study,
                                                        const std::vector<StudyResult>& results) {
    std::vector<std::pair<std::string, Chart>> charts;
    if (study.axes.empty() || results.empty()) return charts;
    const SweepAxis& last = study.axes.back();

    ChartOptions base;
    base.x_label = last.name;
    base.log_x = last.numeric && last.log_scale;
    if (!last.numeric)
        for (std::size_t k = 0; k < last.variants.size(); ++k)
            base.x_ticks.emplace_back(static_cast<double>(k), last.variants[k].label);

    std::vector<std::string> groups;
    std::map<std::string, std::size_t> index;
    for (const auto& r : results) {
        const auto key = group_key(r.point);
        if (index.emplace(key, groups.size()).second) groups.push_back(key);
    }
    auto series_name = [](const std::string& group, const char* what) {
        return group.empty() ? std::string(what) : group + " " + what;
    };

    if (study.optimize) {
        std::vector<ChartSeries> series;
        for (const auto& g : groups) {
            series.push_back({series_name(g, "lambda_B*"), {}});
            series.push_back({series_name(g, "lambda_C*"), {}});
        }
        for (const auto& r : results) {
            const std::size_t g = index[group_key(r.point)];
            const double x = r.point.coordinates.back();
            const double nan = std::nan("");
            series[2 * g].points.emplace_back(x, r.optimum ? r.optimum->lambda_star.lambda_B : nan);
            series[2 * g + 1].points.emplace_back(x, r.optimum ? r.optimum->lambda_star.lambda_C : nan);
        }
        ChartOptions opt = base;
        opt.title = study.name + ": optimal design factors";
        opt.y_label = "lambda*";
        charts.emplace_back(study.name + "_lambda.svg", line_chart(series, opt));
    }
    if (study.threshold) {
        std::vector<ChartSeries> series;
        for (const auto& g : groups) series.push_back({series_name(g, "p_LD_th"), {}});
        for (const auto& r : results) {
            const std::size_t g = index[group_key(r.point)];
            double y = std::nan("");
            if (r.threshold && r.threshold->status == ThresholdStatus::Bracketed)
                y = std::log10(r.threshold->p_LD_th);
            series[g].points.emplace_back(r.point.coordinates.back(), y);
        }
        ChartOptions opt = base;
        opt.title = study.name + ": threshold local damage probability";
        opt.y_label = "log10 p_LD_th";
        charts.emplace_back(study.name + "_threshold.svg", line_chart(series, opt));
    }
    return charts;
}

std::vector<std::filesystem::path> write_study_outputs(const StudyDefinition& study,
                                                       const std::vector<StudyResult>& results) {
    std::vector<std::filesystem::path> written;
    std::filesystem::create_directories(study.output_dir);
    auto write = [&](const std::string& name, const std::string& content) {
        const auto path = study.output_dir / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("cannot write " + path.string());
        out << content;
        written.push_back(path);
    };
    if (study.emit_csv) write(study.name + ".csv", study_table(study, results).str());
    if (study.emit_svg)
        for (const auto& [name, chart] : study_charts(study, results)) write(name, chart.svg);
    return written;
}

std::vector<FrameGeometry> standard_frames() {
    std::vector<FrameGeometry> out;
    for (auto [stories, bays] : {std::pair{16, 4}, {13, 5}, {11, 6}, {8, 8}, {6, 11}, {5, 13}, {4, 16}}) {
        FrameGeometry g;
        g.n_s = stories;
        g.n_c = bays + 1;
        out.push_back(g);
    }
    return out;
}

std::vector<std::string> catalog_names() {
    return {"frames", "bay-aspect", "cost-multipliers", "strengthening-cost", "initial-damage", "p-ld"};
}

StudyDefinition catalog_study(const std::string& name) {
    StudyDefinition s;
    s.name = name;
    s.output_dir = name;
    s.axes.push_back(frame_axis(standard_frames()));
    s.threshold = true;

    auto variants = [&](const char* axis_name, std::vector<AxisVariant> vs) {
        s.axes.push_back({axis_name, std::move(vs), false, false});
    };
    if (name == "frames") {
    } else if (name == "bay-aspect") {
        variants("bay", {{"L=2H", {}},
                         {"L=H", {set("geometry.L", 3.0)}},
                         {"L=H doubled bays", {set("geometry.L", 3.0), {kBays, ScenarioPatch::Op::Scale, "2"}}},
                         {"L=3H", {set("geometry.L", 9.0)}}});
    } else if (name == "cost-multipliers") {
        auto k = [](double d, double b) {
            return std::vector<ScenarioPatch>{set("costs.k_ductile", d), set("costs.k_brittle", b)};
        };
        variants("k", {{"20/40", k(20, 40)}, {"40/40", k(40, 40)}, {"40/80", k(40, 80)}, {"50/200", k(50, 200)}});
    } else if (name == "strengthening-cost") {
        auto a = [](double b, double c) {
            return std::vector<ScenarioPatch>{set("costs.alpha_B", b), set("costs.alpha_C", c)};
        };
        auto all = a(0.7, 0.7);
        all.push_back(set("costs.n_reinf_s", "all"));
        variants("alpha", {{"0.7/0.7", a(0.7, 0.7)}, {"0.9/0.9", a(0.9, 0.9)}, {"0.5/0.9", a(0.5, 0.9)},
                           {"0.7/0.7 all stories", all}});
    } else if (name == "initial-damage") {
        auto d = [](int c, int st) {
            return std::vector<ScenarioPatch>{set("damage.n_rc0", c), set("damage.n_rs0", st)};
        };
        variants("damage", {{"1x1", d(1, 1)}, {"1x0", d(1, 0)}, {"2x1", d(2, 1)}, {"3x2", d(3, 2)}});
    } else if (name == "p-ld") {
        std::vector<json> ps;
        for (int k = 0; k <= 12; ++k) ps.emplace_back(std::pow(10.0, -6.0 + 0.5 * k));
        s.axes.push_back(parameter_axis("p_LD", "p_LD", ps, true));
        s.threshold = false;
    } else {
        throw Error("unknown study catalog '" + name + "'");
    }
    check_study(s);
    return s;
}

}  // namespace riskframe
