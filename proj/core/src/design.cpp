#include "riskframe/design.hpp"

#include <algorithm>

namespace riskframe {

namespace {

void require_phi(double phi) {
    if (!(phi > 0.0 && phi <= 1.0)) throw DomainError("resistance factor phi must lie in (0, 1]");
}

}  // namespace

NlcCapacities design_nlc(const FrameGeometry& geom, const LoadModel& loads, double phi) {
    require_phi(phi);
    const double q = loads.nlc.factored(loads.D_n, loads.L_n);
    const double n_c = geom.n_c;
    return {
        geom.L * geom.L / (16.0 * phi) * q,
        geom.L * geom.n_s * (n_c - 1.0) / (phi * n_c) * q,
    };
}

ApmCapacities strengthen_apm(const FrameGeometry& geom, const LoadModel& loads,
                             const DamageScenario& damage, double phi, double R_c_nlc) {
    require_phi(phi);
    if (damage.n_rc0 < 1)
        throw DomainError("strengthen_apm needs n_rc0 >= 1; an undamaged frame uses design_nlc");
    if (damage.n_rc0 > geom.n_c - 2 || damage.n_rs0 < 0 || damage.n_rs0 > geom.n_s)
        throw DomainError("strengthen_apm: damage extent does not fit the frame");

    const double q = loads.removal.factored(loads.D_n, loads.L_n);
    const double n_s = geom.n_s;
    const double n_c = geom.n_c;
    const double B_y = damage.n_rc0 * geom.L * geom.L / (4.0 * phi) * q;
    const double spread = 2.0 - (n_c - 1.0) / n_c + damage.n_rc0 * (1.0 - damage.n_rs0 / n_s);
    const double R_c = std::max(R_c_nlc, geom.L * n_s / phi * spread * q);
    return {B_y, R_c};
}

std::pair<double, double> strengthening_factors(const MemberDesign& d) {
    if (!(d.B_y_nlc > 0.0 && d.R_c_nlc > 0.0))
        throw DomainError("strengthening_factors: normal capacities must be positive");
    return {d.B_y_0 / d.B_y_nlc, d.R_c_0 / d.R_c_nlc};
}

MemberDesign design_members(const Scenario& scenario) {
    const auto nlc = design_nlc(scenario.geometry, scenario.loads, scenario.phi_nlc);
    const auto apm = strengthen_apm(scenario.geometry, scenario.loads, scenario.damage,
                                    scenario.phi_apm, nlc.R_c);
    MemberDesign d{nlc.B_y, nlc.R_c, apm.B_y, apm.R_c, 1.0, 1.0};
    std::tie(d.B_sf, d.R_sf) = strengthening_factors(d);
    return d;
}

std::vector<std::string> design_warnings(const MemberDesign& design) {
    std::vector<std::string> out;
    if (design.B_y_0 < design.B_y_nlc)
        out.emplace_back("strengthened beam capacity B_y_0 is below the normal design B_y_nlc");
    return out;
}

MemberDesign unstrengthened(const MemberDesign& design) {
    return {design.B_y_nlc, design.R_c_nlc, design.B_y_nlc, design.R_c_nlc, 1.0, 1.0};
}

std::pair<Scenario, MemberDesign> normal_frame(const Scenario& scenario,
                                               const MemberDesign& design) {
    Scenario s = scenario;
    s.costs.n_reinf_s = 0;
    return {s, unstrengthened(design)};
}

}  // namespace riskframe
