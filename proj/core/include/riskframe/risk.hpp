#pragma once

// Conditional failure probabilities given local damage, the progressive
// local-pancake chain, and the total expected cost objective.

#include <string_view>
#include <vector>

#include "riskframe/design.hpp"
#include "riskframe/mechanics.hpp"
#include "riskframe/model.hpp"

namespace riskframe {

struct ModeProbabilities {
    double p_B = 0.0;
    double p_PL = 0.0;
    double p_PG = 0.0;
};

/// Term attaining a stage maximum. Ties resolve to the first in this order.
enum class StageTerm { Bending, LocalPancake, GlobalPancake };

std::string_view to_string(StageTerm term) noexcept;

struct StageCost {
    double value = 0.0;
    StageTerm term = StageTerm::Bending;
};

struct ProgressionRow {
    int n_fc = 0;
    double p_B = 0.0;
    double p_PL = 0.0;
    double p_PG = 0.0;
    double c_B = 0.0;
    double c_PL = 0.0;
    double c_PG = 0.0;
    double chain_two_factor = 1.0;   ///< p_PL(j-2) p_PL(j); 1 on the initial row
    double chain_cumulative = 1.0;   ///< p_PL(n0) ... p_PL(j); 1 on the initial row
    double chain_probability = 1.0;  ///< the weight selected by Scenario::chain
    double stage_cost = 0.0;         ///< stage maximum before chain weighting
    StageTerm stage_term = StageTerm::Bending;
    double stage_expected_cost = 0.0;  ///< chain_probability * stage_cost
};

/// Where the maximum of the damage bracket came from.
struct DominantEvent {
    int n_fc = 0;
    StageTerm term = StageTerm::Bending;
    bool progressive = false;  ///< true when a later chain stage wins
};

/// Every term of the total expected cost at one design point.
struct ExpectedCostTerms {
    double construction = 0.0;      ///< C_const(lambda)
    double intact_bending = 0.0;    ///< C_const(1,1) Phi(-beta_B^50)
    double intact_pancake = 0.0;    ///< C_PG Phi(-beta_PG^50)
    double initial_damage = 0.0;    ///< C_ID
    double damage_max = 0.0;        ///< maximum expected cost over the damage events
    double p_LD = 0.0;
    DominantEvent dominant;
    double total = 0.0;

    /// p_LD (C_ID + damage_max)
    double damage_bracket() const noexcept { return p_LD * (initial_damage + damage_max); }
};

/// Bending mode used for the damaged frame under the scenario's catenary setting.
CollapseMode damaged_bending_mode(const Scenario& scenario) noexcept;
/// Bending mode used for the intact 50-year term.
CollapseMode intact_bending_mode(const Scenario& scenario) noexcept;

/// Evaluates the expected-cost objective for one (scenario, design) pair.
/// Failure costs and other lambda-independent quantities are computed once
/// at construction, so repeated evaluation over lambda is cheap.
class ExpectedCostModel {
public:
    /// Throws ValidationError for an invalid scenario and DomainError when
    /// there is no initial damage (n_rc0 = 0).
    ExpectedCostModel(Scenario scenario, MemberDesign design);

    const Scenario& scenario() const noexcept { return scenario_; }
    const MemberDesign& design() const noexcept { return design_; }

    ModeProbabilities probabilities(const DesignFactors& factors, int n_fc) const;
    StageCost stage(const ModeProbabilities& p, int n_fc, bool initial) const;

    double total(const DesignFactors& factors) const;
    double total(const DesignFactors& factors, double p_LD) const;
    ExpectedCostTerms terms(const DesignFactors& factors) const;
    ExpectedCostTerms terms(const DesignFactors& factors, double p_LD) const;
    std::vector<ProgressionRow> trace(const DesignFactors& factors) const;

    /// n_fc values of the chain: n0, n0 + 2, ..., up to n_c - 2.
    std::vector<int> chain_stages() const;

private:
    double c_B(int n_fc) const { return c_B_[static_cast<std::size_t>(n_fc)]; }
    double c_PL(int n_fc) const { return c_PL_[static_cast<std::size_t>(n_fc)]; }

    Scenario scenario_;
    MemberDesign design_;
    double c_const_unit_ = 0.0;
    double c_PG_ = 0.0;
    double c_ID_ = 0.0;
    std::vector<double> c_B_;
    std::vector<double> c_PL_;
};

ModeProbabilities mode_probabilities(const Scenario& scenario, const MemberDesign& design,
                                     const DesignFactors& factors, int n_fc);

/// Initial stage: max(p_B C_B, p_PL C_PL, p_PG C_PG). Later stages:
/// max(p_B C_B, C_PL, p_PG C_PG) with C_PL unweighted.
StageCost stage_expected_cost(const Scenario& scenario, const MemberDesign& design,
                              const DesignFactors& factors, int n_fc, bool is_initial);

double total_expected_cost(const Scenario& scenario, const MemberDesign& design,
                           const DesignFactors& factors);

ExpectedCostTerms expected_cost_terms(const Scenario& scenario, const MemberDesign& design,
                                      const DesignFactors& factors);

std::vector<ProgressionRow> progression_trace(const Scenario& scenario,
                                              const MemberDesign& design,
                                              const DesignFactors& factors);

}  // namespace riskframe
