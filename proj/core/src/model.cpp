#include "riskframe/model.hpp"

#include <cmath>

namespace riskframe {

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error([&] {
          std::string what = "invalid scenario:";
          for (const auto& v : violations) what += " [" + v.field + ": " + v.message + "]";
          return what;
      }()),
      violations_(std::move(violations)) {}

LoadModel LoadModel::from_nominal(double D_n, double L_n) {
    LoadModel m;
    m.D_n = D_n;
    m.L_n = L_n;
    m.dead = {1.05 * D_n, 0.10 * 1.05 * D_n, "Normal"};
    m.live_apt = {0.25 * L_n, 0.55 * 0.25 * L_n, "Gamma"};
    m.live_50 = {1.0 * L_n, 0.25 * 1.0 * L_n, "Gumbel"};
    // Resistance stds are the tabulated C.O.V. times the mean, rounded to
    // two decimals (0.165 * 1.22 -> 0.20, 0.184 * 1.20 -> 0.22).
    m.beam_resistance = {1.22, 0.20, "Normal"};
    m.column_resistance = {1.20, 0.22, "Normal"};
    return m;
}

std::string_view to_string(CatenaryUse use) noexcept {
    switch (use) {
        case CatenaryUse::Off: return "off";
        case CatenaryUse::DamagedOnly: return "damaged";
        case CatenaryUse::Full: return "full";
    }
    return "off";
}

std::string_view to_string(ChainWeighting weighting) noexcept {
    switch (weighting) {
        case ChainWeighting::Cumulative: return "cumulative";
        case ChainWeighting::TwoFactor: return "two-factor";
    }
    return "cumulative";
}

Scenario Scenario::reference() { return Scenario{}; }

namespace {

class Checker {
public:
    void require(bool ok, std::string field, std::string message) {
        if (!ok) out_.push_back({std::move(field), std::move(message)});
    }

    void finite(double v, const std::string& field) {
        require(std::isfinite(v), field, field + " must be finite");
    }

    void stats(const RandomVarStats& s, const std::string& field) {
        finite(s.mean, field + ".mean");
        finite(s.std, field + ".std");
        require(s.std >= 0.0, field + ".std", field + ".std >= 0 violated");
    }

    std::vector<Violation> take() { return std::move(out_); }

private:
    std::vector<Violation> out_;
};

}  // namespace

std::vector<Violation> check(const Scenario& s) {
    Checker c;
    const auto& g = s.geometry;
    c.require(g.n_s >= 1, "geometry.n_s", "n_s >= 1 violated");
    c.require(g.n_c >= 2, "geometry.n_c", "n_c >= 2 violated");
    c.require(std::isfinite(g.L) && g.L > 0.0, "geometry.L", "L > 0 violated");
    c.require(std::isfinite(g.H) && g.H > 0.0, "geometry.H", "H > 0 violated");

    const auto& d = s.damage;
    c.require(d.n_rc0 >= 0, "damage.n_rc0", "n_rc0 >= 0 violated");
    c.require(d.n_rc0 <= g.n_c - 2, "damage.n_rc0", "n_rc0 <= n_c - 2 violated");
    c.require(d.n_rs0 >= 0, "damage.n_rs0", "n_rs0 >= 0 violated");
    c.require(d.n_rs0 <= g.n_s, "damage.n_rs0", "n_rs0 <= n_s violated");

    const auto& l = s.loads;
    c.finite(l.D_n, "loads.D_n");
    c.finite(l.L_n, "loads.L_n");
    c.require(l.D_n >= 0.0, "loads.D_n", "D_n >= 0 violated");
    c.require(l.L_n >= 0.0, "loads.L_n", "L_n >= 0 violated");
    c.stats(l.dead, "loads.dead");
    c.stats(l.live_apt, "loads.live_apt");
    c.stats(l.live_50, "loads.live_50");
    c.stats(l.beam_resistance, "loads.beam_resistance");
    c.stats(l.column_resistance, "loads.column_resistance");
    c.require(l.beam_resistance.mean > 0.0, "loads.beam_resistance.mean", "mean > 0 violated");
    c.require(l.column_resistance.mean > 0.0, "loads.column_resistance.mean", "mean > 0 violated");
    c.require(l.nlc.factored(l.D_n, l.L_n) > 0.0, "loads.nlc", "factored NLC load > 0 violated");
    c.require(l.removal.factored(l.D_n, l.L_n) > 0.0, "loads.removal",
              "factored removal load > 0 violated");

    const auto& k = s.costs;
    c.require(k.alpha_B >= 0.0 && k.alpha_B <= 1.0, "costs.alpha_B", "0 <= alpha_B <= 1 violated");
    c.require(k.alpha_C >= 0.0 && k.alpha_C <= 1.0, "costs.alpha_C", "0 <= alpha_C <= 1 violated");
    c.require(std::isfinite(k.k_ductile) && k.k_ductile > 0.0, "costs.k_ductile",
              "k_ductile > 0 violated");
    c.require(std::isfinite(k.k_brittle) && k.k_brittle > 0.0, "costs.k_brittle",
              "k_brittle > 0 violated");
    c.require(k.n_reinf_s >= 0, "costs.n_reinf_s", "n_reinf_s >= 0 violated");
    c.require(k.n_reinf_s <= g.n_s, "costs.n_reinf_s", "n_reinf_s <= n_s violated");

    c.require(s.p_LD >= 0.0, "p_LD", "p_LD >= 0 violated");
    c.require(s.p_LD <= 1.0, "p_LD", "p_LD <= 1 violated");
    c.require(s.psi >= 0.0, "psi", "psi >= 0 violated");
    c.require(s.psi <= 4.0, "psi", "psi <= 4 violated");
    c.require(s.phi_nlc > 0.0 && s.phi_nlc <= 1.0, "phi_nlc", "0 < phi_nlc <= 1 violated");
    c.require(s.phi_apm > 0.0 && s.phi_apm <= 1.0, "phi_apm", "0 < phi_apm <= 1 violated");
    return c.take();
}

const Scenario& validate(const Scenario& scenario) {
    auto violations = check(scenario);
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return scenario;
}

double annual_from_lifetime(double p_LD) {
    if (!(p_LD >= 0.0 && p_LD < 1.0))
        throw DomainError("annual_from_lifetime: p_LD must lie in [0, 1)");
    return -std::log1p(-p_LD) / 50.0;
}

}  // namespace riskframe
