#pragma once

// Cornell (mean-value second-moment) reliability indexes for linear limit
// states R r - D - L with Gaussian-approximated variables.

#include <optional>

#include "riskframe/design.hpp"
#include "riskframe/mechanics.hpp"
#include "riskframe/model.hpp"

namespace riskframe {

/// Which live load the limit state is paired with.
enum class Horizon {
    ArbitraryPointInTime,  ///< sustained live load, used given damage
    FiftyYear,             ///< 50-year extreme live load, used for the intact frame
};

/// Standard normal CDF, clamped to [0, 1].
double std_normal_cdf(double x);

/// (r mu_R - (mu_D + mu_L)) / sqrt(r^2 sigma_R^2 + sigma_D^2 + sigma_L^2).
/// Throws DomainError when every standard deviation is zero.
double cornell_beta(double r, const RandomVarStats& resistance, const RandomVarStats& dead,
                    const RandomVarStats& live);

const RandomVarStats& live_load(const LoadModel& loads, Horizon horizon) noexcept;

/// Intact frame. Bending and Catenary scale B_y_0 by lambda_B (Catenary
/// with the scenario's psi); GlobalPancake scales R_c_0 by lambda_C.
/// LocalPancake has no intact counterpart and throws DomainError.
double beta_intact(const Scenario& scenario, const MemberDesign& design,
                   const DesignFactors& factors, CollapseMode mode,
                   Horizon horizon = Horizon::FiftyYear);

/// Frame with n_rc removed columns over n_rs stories.
double beta_damaged(const Scenario& scenario, const MemberDesign& design,
                    const DesignFactors& factors, int n_rc, int n_rs, CollapseMode mode,
                    Horizon horizon = Horizon::ArbitraryPointInTime);

struct BetaSet {
    double beta_B = 0.0;
    std::optional<double> beta_PL;  ///< absent for the intact frame
    double beta_PG = 0.0;
    std::optional<double> beta_cat;
};

BetaSet intact_betas(const Scenario& scenario, const MemberDesign& design,
                     const DesignFactors& factors, Horizon horizon = Horizon::FiftyYear);

BetaSet damaged_betas(const Scenario& scenario, const MemberDesign& design,
                      const DesignFactors& factors, int n_rc, int n_rs,
                      Horizon horizon = Horizon::ArbitraryPointInTime);

}  // namespace riskframe
