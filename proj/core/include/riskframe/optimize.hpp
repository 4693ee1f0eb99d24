#pragma once

// Minimization of the total expected cost over (lambda_B, lambda_C) and the
// threshold local damage probability.

#include <string_view>
#include <vector>

#include "riskframe/reliability.hpp"
#include "riskframe/risk.hpp"
#include "riskframe/simplex.hpp"

namespace riskframe {

struct OptimizerOptions {
    int grid_points = 5;       ///< per axis
    double grid_lo = 0.2;
    double grid_hi = 2.5;
    double lambda_min = 0.05;  ///< design factors are clamped to [lambda_min, lambda_max]
    double lambda_max = 5.0;
    SimplexOptions simplex{};
};

struct OptimizationResult {
    DesignFactors lambda_star;
    double c_te_star = 0.0;
    BetaSet damaged_betas;  ///< arbitrary-point-in-time, at the initial damage
    BetaSet intact_betas;   ///< 50-year, intact frame
    double beta_B_objective = 0.0;  ///< damaged bending index in the objective's mode
    int starts_used = 0;
    int evaluations = 0;
    bool converged = false;
};

/// Multi-start Nelder-Mead over a fixed grid of starts (plus lambda = (1, 1)).
/// The best local minimum wins; ties go to the lexicographically smaller
/// lambda. Deterministic for a given input.
OptimizationResult minimize_total_cost(const ExpectedCostModel& model, double p_LD,
                                       const OptimizerOptions& options = {});

OptimizationResult minimize_total_cost(const Scenario& scenario, const MemberDesign& design,
                                       const OptimizerOptions& options = {});

enum class ThresholdStatus {
    Bracketed,        ///< the optimal bending index changes sign inside the search interval
    AlwaysStrengthen, ///< optimal bending index positive over the whole interval
    NeverStrengthen,  ///< optimal bending index negative over the whole interval
};

std::string_view to_string(ThresholdStatus status) noexcept;

struct ThresholdOptions {
    double log10_lo = -6.0;
    double log10_hi = 0.0;
    double log10_tol = 0.01;
    OptimizerOptions optimizer{};
};

struct ThresholdResult {
    ThresholdStatus status = ThresholdStatus::Bracketed;
    double p_LD_th = 0.0;        ///< midpoint of the final bracket (Bracketed only)
    double log10_lo = 0.0;       ///< final bracket
    double log10_hi = 0.0;
    double beta_at_lo = 0.0;     ///< optimal bending index at the bracket ends
    double beta_at_hi = 0.0;
    int optimizations = 0;
    // Cost comparison of the code designs at the threshold (or at the upper
    // end of the interval when no root exists), for reporting only.
    double c_te_strengthened = 0.0;  ///< strengthened frame, lambda = (1, 1)
    double c_te_normal = 0.0;        ///< normal frame, lambda = (1, 1)
};

/// Root in log10(p_LD) of the optimal damaged bending reliability index,
/// located by bisection with the full multi-start optimizer at every step.
ThresholdResult threshold_probability(const Scenario& scenario, const MemberDesign& design,
                                      const ThresholdOptions& options = {});

}  // namespace riskframe
