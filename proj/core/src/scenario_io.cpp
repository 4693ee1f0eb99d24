#include "riskframe/scenario_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace riskframe {

using nlohmann::json;

namespace {

class ObjectReader {
public:
    ObjectReader(const json* object, std::string path) : object_(object), path_(std::move(path)) {
        if (object_ && !object_->is_object()) throw ParseError(where() + " must be an object");
    }

    bool has(const char* key) const { return object_ && object_->contains(key); }

    void number(const char* key, double& out) {
        if (const json* v = take(key)) {
            if (!v->is_number()) throw ParseError(field(key) + " must be a number");
            out = v->get<double>();
        }
    }

    void integer(const char* key, int& out) {
        if (const json* v = take(key)) {
            if (!v->is_number_integer()) throw ParseError(field(key) + " must be an integer");
            out = v->get<int>();
        }
    }

    void text(const char* key, std::string& out) {
        if (const json* v = take(key)) {
            if (!v->is_string()) throw ParseError(field(key) + " must be a string");
            out = v->get<std::string>();
        }
    }

    const json* raw(const char* key) { return take(key); }

    ObjectReader child(const char* key) { return ObjectReader(take(key), field(key)); }

    /// Rejects every key that was not read.
    void finish() const {
        if (!object_) return;
        for (const auto& item : object_->items())
            if (!seen_.count(item.key())) throw ParseError("unknown key " + field(item.key().c_str()));
    }

    std::string field(const char* key) const {
        return path_.empty() ? std::string(key) : path_ + "." + key;
    }

private:
    const json* take(const char* key) {
        if (!object_) return nullptr;
        auto it = object_->find(key);
        if (it == object_->end()) return nullptr;
        seen_.insert(key);
        return &*it;
    }

    std::string where() const { return path_.empty() ? "document" : path_; }

    const json* object_;
    std::string path_;
    std::set<std::string> seen_;
};

void read_stats(ObjectReader parent, RandomVarStats& stats) {
    parent.number("mean", stats.mean);
    parent.number("std", stats.std);
    parent.text("distribution", stats.distribution);
    parent.finish();
}

void read_combination(ObjectReader parent, LoadCombination& combo) {
    parent.number("dead", combo.dead);
    parent.number("live", combo.live);
    parent.finish();
}

Scenario from_json(const json& doc) {
    Scenario s = Scenario::reference();
    ObjectReader root(&doc, "");

    {
        auto g = root.child("geometry");
        g.integer("n_s", s.geometry.n_s);
        g.integer("n_c", s.geometry.n_c);
        g.number("L", s.geometry.L);
        g.number("H", s.geometry.H);
        g.finish();
    }
    {
        auto l = root.child("loads");
        double D_n = 1.0, L_n = 1.0;
        l.number("D_n", D_n);
        l.number("L_n", L_n);
        s.loads = LoadModel::from_nominal(D_n, L_n);
        read_stats(l.child("dead"), s.loads.dead);
        read_stats(l.child("live_apt"), s.loads.live_apt);
        read_stats(l.child("live_50"), s.loads.live_50);
        read_stats(l.child("beam_resistance"), s.loads.beam_resistance);
        read_stats(l.child("column_resistance"), s.loads.column_resistance);
        read_combination(l.child("nlc"), s.loads.nlc);
        read_combination(l.child("removal"), s.loads.removal);
        l.finish();
    }
    {
        auto d = root.child("damage");
        d.integer("n_rc0", s.damage.n_rc0);
        d.integer("n_rs0", s.damage.n_rs0);
        d.finish();
    }
    {
        auto c = root.child("costs");
        c.number("alpha_B", s.costs.alpha_B);
        c.number("alpha_C", s.costs.alpha_C);
        c.number("k_ductile", s.costs.k_ductile);
        c.number("k_brittle", s.costs.k_brittle);
        if (const json* v = c.raw("n_reinf_s")) {
            if (v->is_string() && v->get<std::string>() == "all")
                s.costs.n_reinf_s = s.geometry.n_s;
            else if (v->is_number_integer())
                s.costs.n_reinf_s = v->get<int>();
            else
                throw ParseError("costs.n_reinf_s must be an integer or \"all\"");
        }
        c.finish();
    }
    root.number("p_LD", s.p_LD);
    root.number("psi", s.psi);
    root.number("phi_nlc", s.phi_nlc);
    root.number("phi_apm", s.phi_apm);
    std::string text;
    if (root.has("catenary")) {
        root.text("catenary", text);
        s.catenary = catenary_from_string(text);
    }
    if (root.has("chain_weighting")) {
        root.text("chain_weighting", text);
        s.chain = chain_from_string(text);
    }
    root.finish();
    return s;
}

json stats_json(const RandomVarStats& s) {
    return {{"mean", s.mean}, {"std", s.std}, {"distribution", s.distribution}};
}

json combo_json(const LoadCombination& c) { return {{"dead", c.dead}, {"live", c.live}}; }

int parse_int(std::string_view text, std::string_view what) {
    int value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError("malformed " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

std::pair<int, int> split_tag(std::string_view tag, std::string_view what) {
    const auto x = tag.find_first_of("xX");
    if (x == std::string_view::npos)
        throw ParseError("malformed " + std::string(what) + " '" + std::string(tag) +
                         "', expected AxB");
    return {parse_int(tag.substr(0, x), what), parse_int(tag.substr(x + 1), what)};
}

}  // namespace

Scenario parse_scenario_unchecked(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return from_json(doc);
}

Scenario parse_scenario_text(std::string_view json_text) {
    Scenario s = parse_scenario_unchecked(json_text);
    validate(s);
    return s;
}

Scenario parse_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str());
}

std::string scenario_to_json(const Scenario& s, int indent) {
    const json doc = {
        {"geometry", {{"n_s", s.geometry.n_s}, {"n_c", s.geometry.n_c}, {"L", s.geometry.L},
                      {"H", s.geometry.H}}},
        {"loads",
         {{"D_n", s.loads.D_n},
          {"L_n", s.loads.L_n},
          {"dead", stats_json(s.loads.dead)},
          {"live_apt", stats_json(s.loads.live_apt)},
          {"live_50", stats_json(s.loads.live_50)},
          {"beam_resistance", stats_json(s.loads.beam_resistance)},
          {"column_resistance", stats_json(s.loads.column_resistance)},
          {"nlc", combo_json(s.loads.nlc)},
          {"removal", combo_json(s.loads.removal)}}},
        {"damage", {{"n_rc0", s.damage.n_rc0}, {"n_rs0", s.damage.n_rs0}}},
        {"costs", {{"alpha_B", s.costs.alpha_B}, {"alpha_C", s.costs.alpha_C},
                   {"k_ductile", s.costs.k_ductile}, {"k_brittle", s.costs.k_brittle},
                   {"n_reinf_s", s.costs.n_reinf_s}}},
        {"p_LD", s.p_LD},
        {"psi", s.psi},
        {"phi_nlc", s.phi_nlc},
        {"phi_apm", s.phi_apm},
        {"catenary", std::string(to_string(s.catenary))},
        {"chain_weighting", std::string(to_string(s.chain))},
    };
    return doc.dump(indent);
}

FrameGeometry frame_from_tag(std::string_view tag) {
    const auto [stories, bays] = split_tag(tag, "frame");
    if (stories < 1 || bays < 1) throw ParseError("frame '" + std::string(tag) + "' needs positive counts");
    FrameGeometry g;
    g.n_s = stories;
    g.n_c = bays + 1;
    return g;
}

std::string frame_tag(const FrameGeometry& geom) {
    return std::to_string(geom.n_s) + "x" + std::to_string(geom.bays());
}

DamageScenario damage_from_tag(std::string_view tag) {
    const auto [columns, stories] = split_tag(tag, "damage");
    return {columns, stories};
}

CatenaryUse catenary_from_string(std::string_view text) {
    if (text == "off") return CatenaryUse::Off;
    if (text == "damaged") return CatenaryUse::DamagedOnly;
    if (text == "full") return CatenaryUse::Full;
    throw ParseError("catenary must be one of off, damaged, full (got '" + std::string(text) + "')");
}

ChainWeighting chain_from_string(std::string_view text) {
    if (text == "cumulative") return ChainWeighting::Cumulative;
    if (text == "two-factor") return ChainWeighting::TwoFactor;
    throw ParseError("chain_weighting must be cumulative or two-factor (got '" +
                     std::string(text) + "')");
}

}  // namespace riskframe
