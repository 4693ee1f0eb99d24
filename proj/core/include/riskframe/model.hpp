#pragma once

// Domain vocabulary shared by every module: frame geometry, loads and their
// statistics, damage extent, cost parameters and the complete scenario.
// Units are fixed: kN, kNm, m. Loads are distributed intensities in kN/m.

#include <string>
#include <string_view>
#include <vector>

#include "riskframe/errors.hpp"

namespace riskframe {

/// Regular plane frame: n_s stories, n_c columns per story, equal bays.
struct FrameGeometry {
    int n_s = 8;      ///< stories
    int n_c = 9;      ///< columns per story
    double L = 6.0;   ///< bay length (m)
    double H = 3.0;   ///< story height (m)

    int bays() const noexcept { return n_c - 1; }
};

/// Discretionary initial damage the frame is strengthened for.
struct DamageScenario {
    int n_rc0 = 1;  ///< removed columns
    int n_rs0 = 1;  ///< vertical extent in stories
};

struct DesignFactors {
    double lambda_B = 1.0;
    double lambda_C = 1.0;
};

/// Second-moment description of a random variable. `distribution` is
/// metadata only; every reliability computation uses (mean, std).
struct RandomVarStats {
    double mean = 0.0;
    double std = 0.0;
    std::string distribution = "Normal";

    double cov() const noexcept { return mean != 0.0 ? std / mean : 0.0; }
};

/// Factored gravity combination dead * D_n + live * L_n.
struct LoadCombination {
    double dead = 1.2;
    double live = 1.6;

    double factored(double D_n, double L_n) const noexcept { return dead * D_n + live * L_n; }
};

struct LoadModel {
    double D_n = 1.0;  ///< nominal dead load (kN/m)
    double L_n = 1.0;  ///< nominal live load (kN/m)
    RandomVarStats dead;
    RandomVarStats live_apt;
    RandomVarStats live_50;
    RandomVarStats beam_resistance;
    RandomVarStats column_resistance;
    LoadCombination nlc{1.2, 1.6};      ///< normal loading condition
    LoadCombination removal{1.2, 0.5};  ///< element-removal (extraordinary) condition

    /// Statistics for the given nominal loads: dead (1.05 D_n, C.O.V. 0.10),
    /// arbitrary-point-in-time live (0.25 L_n, 0.55), 50-year live
    /// (1.0 L_n, 0.25), beam resistance (1.22, std 0.20) and column
    /// resistance (1.20, std 0.22).
    static LoadModel from_nominal(double D_n, double L_n);
};

struct CostParameters {
    double alpha_B = 0.7;     ///< steel share of beam cost
    double alpha_C = 0.7;     ///< steel share of column cost
    double k_ductile = 20.0;  ///< bending (ductile) failure multiplier
    double k_brittle = 40.0;  ///< pancake (brittle) failure multiplier
    int n_reinf_s = 2;        ///< strengthened stories
};

/// How catenary action enters the expected-cost objective.
///   Off         plastic bending strengths only
///   DamagedOnly catenary term on the damaged-frame bending strength
///   Full        catenary term on both the intact and damaged bending strengths
enum class CatenaryUse { Off, DamagedOnly, Full };

/// Weight given to a progressive-collapse stage j > n0 of the local pancake
/// chain: either the product of every local-pancake probability from n0 up
/// to j, or only the last two factors p_PL(j-2) p_PL(j).
enum class ChainWeighting { Cumulative, TwoFactor };

std::string_view to_string(CatenaryUse use) noexcept;
std::string_view to_string(ChainWeighting weighting) noexcept;

struct Scenario {
    FrameGeometry geometry;
    LoadModel loads = LoadModel::from_nominal(1.0, 1.0);
    DamageScenario damage;
    CostParameters costs;
    double p_LD = 0.1;       ///< 50-year local damage probability
    double psi = 2.0;        ///< catenary parameter, used by catenary modes
    double phi_nlc = 0.85;   ///< resistance factor, normal design
    double phi_apm = 1.0;    ///< resistance factor, strengthening
    CatenaryUse catenary = CatenaryUse::Off;
    ChainWeighting chain = ChainWeighting::Cumulative;

    /// 8 stories x 8 bays, L = 2H = 6 m, D_n = L_n = 1 kN/m, (1 x 1) damage,
    /// two strengthened stories, p_LD = 0.1.
    static Scenario reference();
};

/// Lists every violated invariant. Empty means valid.
std::vector<Violation> check(const Scenario& scenario);

/// Returns `scenario` unchanged when valid; throws ValidationError otherwise.
const Scenario& validate(const Scenario& scenario);

/// Annual threat probability equivalent to a 50-year local damage
/// probability: -ln(1 - p_LD) / 50.
double annual_from_lifetime(double p_LD);

}  // namespace riskframe
