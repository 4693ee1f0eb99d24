#include "riskframe/risk.hpp"

#include "riskframe/cost.hpp"
#include "riskframe/reliability.hpp"

namespace riskframe {

std::string_view to_string(StageTerm term) noexcept {
    switch (term) {
        case StageTerm::Bending: return "bending";
        case StageTerm::LocalPancake: return "local-pancake";
        case StageTerm::GlobalPancake: return "global-pancake";
    }
    return "bending";
}

CollapseMode damaged_bending_mode(const Scenario& s) noexcept {
    return s.catenary == CatenaryUse::Off ? CollapseMode::Bending : CollapseMode::Catenary;
}

CollapseMode intact_bending_mode(const Scenario& s) noexcept {
    return s.catenary == CatenaryUse::Full ? CollapseMode::Catenary : CollapseMode::Bending;
}

ExpectedCostModel::ExpectedCostModel(Scenario scenario, MemberDesign design)
    : scenario_(std::move(scenario)), design_(design) {
    validate(scenario_);
    if (scenario_.damage.n_rc0 < 1)
        throw DomainError("expected cost needs an initial damage with n_rc0 >= 1");
    c_const_unit_ = construction_cost(scenario_, design_, DesignFactors{1.0, 1.0});
    c_PG_ = global_pancake_cost(scenario_, design_);
    c_ID_ = initial_damage_cost(scenario_);
    const int last = scenario_.geometry.n_c - 2;
    c_B_.assign(static_cast<std::size_t>(last) + 1, 0.0);
    c_PL_.assign(static_cast<std::size_t>(last) + 1, 0.0);
    for (int n = 1; n <= last; ++n) {
        c_B_[static_cast<std::size_t>(n)] = bending_collapse_cost(scenario_, design_, n);
        c_PL_[static_cast<std::size_t>(n)] = local_pancake_cost(scenario_, design_, n);
    }
}

ModeProbabilities ExpectedCostModel::probabilities(const DesignFactors& f, int n_fc) const {
    const int n_rs = scenario_.damage.n_rs0;
    const auto beta = [&](CollapseMode mode) {
        return beta_damaged(scenario_, design_, f, n_fc, n_rs, mode,
                            Horizon::ArbitraryPointInTime);
    };
    return {
        std_normal_cdf(-beta(damaged_bending_mode(scenario_))),
        std_normal_cdf(-beta(CollapseMode::LocalPancake)),
        std_normal_cdf(-beta(CollapseMode::GlobalPancake)),
    };
}

StageCost ExpectedCostModel::stage(const ModeProbabilities& p, int n_fc, bool initial) const {
    StageCost best{p.p_B * c_B(n_fc), StageTerm::Bending};
    const double pancake = initial ? p.p_PL * c_PL(n_fc) : c_PL(n_fc);
    if (pancake > best.value) best = {pancake, StageTerm::LocalPancake};
    const double global = p.p_PG * c_PG_;
    if (global > best.value) best = {global, StageTerm::GlobalPancake};
    return best;
}

std::vector<int> ExpectedCostModel::chain_stages() const {
    std::vector<int> out;
    for (int j = scenario_.damage.n_rc0; j <= scenario_.geometry.n_c - 2; j += 2) out.push_back(j);
    return out;
}

double ExpectedCostModel::total(const DesignFactors& f) const { return terms(f).total; }

double ExpectedCostModel::total(const DesignFactors& f, double p_LD) const {
    return terms(f, p_LD).total;
}

ExpectedCostTerms ExpectedCostModel::terms(const DesignFactors& f) const {
    return terms(f, scenario_.p_LD);
}

ExpectedCostTerms ExpectedCostModel::terms(const DesignFactors& f, double p_LD) const {
    ExpectedCostTerms t;
    t.p_LD = p_LD;
    t.construction = construction_cost(scenario_, design_, f);
    t.intact_bending =
        c_const_unit_ *
        std_normal_cdf(-beta_intact(scenario_, design_, f, intact_bending_mode(scenario_)));
    t.intact_pancake =
        c_PG_ * std_normal_cdf(-beta_intact(scenario_, design_, f, CollapseMode::GlobalPancake));
    t.initial_damage = c_ID_;

    const int n0 = scenario_.damage.n_rc0;
    ModeProbabilities p = probabilities(f, n0);
    const StageCost first = stage(p, n0, true);
    t.damage_max = first.value;
    t.dominant = {n0, first.term, false};

    double cumulative = p.p_PL;
    double previous = p.p_PL;
    for (int j = n0 + 2; j <= scenario_.geometry.n_c - 2; j += 2) {
        p = probabilities(f, j);
        cumulative *= p.p_PL;
        const double weight =
            scenario_.chain == ChainWeighting::Cumulative ? cumulative : previous * p.p_PL;
        previous = p.p_PL;
        const StageCost later = stage(p, j, false);
        const double value = weight * later.value;
        if (value > t.damage_max) {
            t.damage_max = value;
            t.dominant = {j, later.term, true};
        }
    }
    t.total = t.construction + t.intact_bending + t.intact_pancake + t.damage_bracket();
    return t;
}

std::vector<ProgressionRow> ExpectedCostModel::trace(const DesignFactors& f) const {
    std::vector<ProgressionRow> rows;
    const int n0 = scenario_.damage.n_rc0;
    double cumulative = 1.0;
    double previous = 1.0;
    for (int j : chain_stages()) {
        const ModeProbabilities p = probabilities(f, j);
        const bool initial = j == n0;
        ProgressionRow row;
        row.n_fc = j;
        row.p_B = p.p_B;
        row.p_PL = p.p_PL;
        row.p_PG = p.p_PG;
        row.c_B = c_B(j);
        row.c_PL = c_PL(j);
        row.c_PG = c_PG_;
        if (!initial) {
            cumulative *= p.p_PL;
            row.chain_two_factor = previous * p.p_PL;
            row.chain_cumulative = cumulative;
        } else {
            cumulative = p.p_PL;
        }
        previous = p.p_PL;
        row.chain_probability = scenario_.chain == ChainWeighting::Cumulative
                                    ? row.chain_cumulative
                                    : row.chain_two_factor;
        const StageCost sc = stage(p, j, initial);
        row.stage_cost = sc.value;
        row.stage_term = sc.term;
        row.stage_expected_cost = row.chain_probability * sc.value;
        rows.push_back(row);
    }
    return rows;
}

ModeProbabilities mode_probabilities(const Scenario& s, const MemberDesign& d,
                                     const DesignFactors& f, int n_fc) {
    const int last = s.geometry.n_c - 2;
    if (n_fc < 1 || n_fc > last) throw DomainError("mode_probabilities: n_fc outside [1, n_c - 2]");
    return ExpectedCostModel(s, d).probabilities(f, n_fc);
}

StageCost stage_expected_cost(const Scenario& s, const MemberDesign& d, const DesignFactors& f,
                              int n_fc, bool is_initial) {
    const ExpectedCostModel model(s, d);
    if (n_fc < 1 || n_fc > s.geometry.n_c - 2)
        throw DomainError("stage_expected_cost: n_fc outside [1, n_c - 2]");
    return model.stage(model.probabilities(f, n_fc), n_fc, is_initial);
}

double total_expected_cost(const Scenario& s, const MemberDesign& d, const DesignFactors& f) {
    return ExpectedCostModel(s, d).total(f);
}

ExpectedCostTerms expected_cost_terms(const Scenario& s, const MemberDesign& d,
                                      const DesignFactors& f) {
    return ExpectedCostModel(s, d).terms(f);
}

std::vector<ProgressionRow> progression_trace(const Scenario& s, const MemberDesign& d,
                                              const DesignFactors& f) {
    return ExpectedCostModel(s, d).trace(f);
}

}  // namespace riskframe
