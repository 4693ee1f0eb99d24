#pragma once

#include <string>
#include <utility>
#include <vector>

#include "riskframe/model.hpp"

namespace riskframe {

/// Member capacities: normal-loading design, strengthened (alternate path)
/// design and their ratios.
struct MemberDesign {
    double B_y_nlc = 0.0;  ///< beam plastic moment, normal design (kNm)
    double R_c_nlc = 0.0;  ///< column crushing capacity, normal design (kN)
    double B_y_0 = 0.0;    ///< beam plastic moment, strengthened (kNm)
    double R_c_0 = 0.0;    ///< column crushing capacity, strengthened (kN)
    double B_sf = 1.0;
    double R_sf = 1.0;
};

struct NlcCapacities {
    double B_y = 0.0;
    double R_c = 0.0;
};

struct ApmCapacities {
    double B_y = 0.0;
    double R_c = 0.0;
};

NlcCapacities design_nlc(const FrameGeometry& geom, const LoadModel& loads, double phi);

/// Capacities needed to bridge the discretionary damage. Column capacity
/// never drops below the normal design value. Throws DomainError for
/// n_rc0 = 0 (nothing to bridge).
ApmCapacities strengthen_apm(const FrameGeometry& geom, const LoadModel& loads,
                             const DamageScenario& damage, double phi, double R_c_nlc);

/// (B_y_0 / B_y_nlc, R_c_0 / R_c_nlc)
std::pair<double, double> strengthening_factors(const MemberDesign& design);

/// Normal design followed by strengthening, both taken from the scenario.
MemberDesign design_members(const Scenario& scenario);

/// Non-fatal design remarks. The beam requirement has no floor at the
/// normal design value, so a strengthened beam weaker than the normal one
/// is reported here.
std::vector<std::string> design_warnings(const MemberDesign& design);

/// The frame as designed for normal loading only: strengthened capacities
/// equal the normal ones, both factors are 1.
MemberDesign unstrengthened(const MemberDesign& design);

/// Scenario/design pair of the normal (not strengthened) frame: no
/// strengthened stories and `unstrengthened(design)` capacities.
std::pair<Scenario, MemberDesign> normal_frame(const Scenario& scenario,
                                               const MemberDesign& design);

}  // namespace riskframe
