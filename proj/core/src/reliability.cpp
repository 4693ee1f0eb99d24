#include "riskframe/reliability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace riskframe {

double std_normal_cdf(double x) {
    if (std::isnan(x)) throw DomainError("std_normal_cdf: NaN argument");
    const double p = 0.5 * std::erfc(-x / std::numbers::sqrt2);
    return std::clamp(p, 0.0, 1.0);
}

double cornell_beta(double r, const RandomVarStats& resistance, const RandomVarStats& dead,
                    const RandomVarStats& live) {
    if (!(r > 0.0)) throw DomainError("cornell_beta: strength r must be positive");
    if (!(resistance.mean > 0.0)) throw DomainError("cornell_beta: resistance mean must be positive");
    const double margin = r * resistance.mean - (dead.mean + live.mean);
    const double rs = r * resistance.std;
    const double variance = rs * rs + dead.std * dead.std + live.std * live.std;
    if (!(variance > 0.0)) throw DomainError("cornell_beta: degenerate statistics (zero variance)");
    return margin / std::sqrt(variance);
}

const RandomVarStats& live_load(const LoadModel& loads, Horizon horizon) noexcept {
    return horizon == Horizon::FiftyYear ? loads.live_50 : loads.live_apt;
}

namespace {

double beta_for(const Scenario& s, CollapseMode mode, double r, Horizon horizon) {
    const auto& resistance = (mode == CollapseMode::Bending || mode == CollapseMode::Catenary)
                                 ? s.loads.beam_resistance
                                 : s.loads.column_resistance;
    return cornell_beta(r, resistance, s.loads.dead, live_load(s.loads, horizon));
}

}  // namespace

double beta_intact(const Scenario& s, const MemberDesign& design, const DesignFactors& f,
                   CollapseMode mode, Horizon horizon) {
    const double B_y = f.lambda_B * design.B_y_0;
    const double R_c = f.lambda_C * design.R_c_0;
    double r = 0.0;
    switch (mode) {
        case CollapseMode::Bending: r = intact_bending_strength(s.geometry, B_y, 0.0); break;
        case CollapseMode::Catenary: r = intact_bending_strength(s.geometry, B_y, s.psi); break;
        case CollapseMode::GlobalPancake: r = intact_pancake_strength(s.geometry, R_c); break;
        case CollapseMode::LocalPancake:
            throw DomainError("local pancake collapse is not defined for the intact frame");
    }
    return beta_for(s, mode, r, horizon);
}

double beta_damaged(const Scenario& s, const MemberDesign& design, const DesignFactors& f,
                    int n_rc, int n_rs, CollapseMode mode, Horizon horizon) {
    const double B_y = f.lambda_B * design.B_y_0;
    const double R_c = f.lambda_C * design.R_c_0;
    double r = 0.0;
    switch (mode) {
        case CollapseMode::Bending:
            r = damaged_bending_strength(s.geometry, B_y, n_rc, 0.0);
            break;
        case CollapseMode::Catenary:
            r = damaged_bending_strength(s.geometry, B_y, n_rc, s.psi);
            break;
        case CollapseMode::LocalPancake:
            r = local_pancake_strength(s.geometry, R_c, n_rc, n_rs);
            break;
        case CollapseMode::GlobalPancake:
            if (n_rc < 1) throw DomainError("beta_damaged needs n_rc >= 1");
            r = global_pancake_strength(s.geometry, R_c, n_rc, n_rs);
            break;
    }
    return beta_for(s, mode, r, horizon);
}

BetaSet intact_betas(const Scenario& s, const MemberDesign& d, const DesignFactors& f,
                     Horizon horizon) {
    BetaSet out;
    out.beta_B = beta_intact(s, d, f, CollapseMode::Bending, horizon);
    out.beta_PG = beta_intact(s, d, f, CollapseMode::GlobalPancake, horizon);
    out.beta_cat = beta_intact(s, d, f, CollapseMode::Catenary, horizon);
    return out;
}

BetaSet damaged_betas(const Scenario& s, const MemberDesign& d, const DesignFactors& f, int n_rc,
                      int n_rs, Horizon horizon) {
    BetaSet out;
    out.beta_B = beta_damaged(s, d, f, n_rc, n_rs, CollapseMode::Bending, horizon);
    out.beta_PL = beta_damaged(s, d, f, n_rc, n_rs, CollapseMode::LocalPancake, horizon);
    out.beta_PG = beta_damaged(s, d, f, n_rc, n_rs, CollapseMode::GlobalPancake, horizon);
    out.beta_cat = beta_damaged(s, d, f, n_rc, n_rs, CollapseMode::Catenary, horizon);
    return out;
}

}  // namespace riskframe
