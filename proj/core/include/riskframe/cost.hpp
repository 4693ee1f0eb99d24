#pragma once

// Construction and failure costs, normalized by the cost of the frame
// designed for normal loading (its total member length).

#include "riskframe/design.hpp"
#include "riskframe/model.hpp"

namespace riskframe {

/// Total linear length of beams and columns: L n_s (n_c - 1) + H n_s n_c.
double reference_cost(const FrameGeometry& geom);

/// Beam cost per unit length summed over all stories; the n_reinf_s
/// strengthened stories cost lambda_B alpha_B B_sf + (1 - alpha_B) each.
double unit_beam_cost(double lambda_B, const CostParameters& costs, double B_sf, int n_s);

/// Column analogue of unit_beam_cost with (lambda_C, alpha_C, R_sf).
double unit_column_cost(double lambda_C, const CostParameters& costs, double R_sf, int n_s);

double construction_cost(const Scenario& scenario, const MemberDesign& design,
                         const DesignFactors& factors);

double initial_damage_cost(const Scenario& scenario);

// Failure costs are evaluated for the frame at lambda = (1, 1) whatever the
// current design point.

/// Ductile bending collapse over min(n_fc + 1, n_c - 1) bays and
/// min(n_fc, n_c) columns, full height.
double bending_collapse_cost(const Scenario& scenario, const MemberDesign& design, int n_fc);

/// Brittle local pancake collapse over min(n_fc + 3, n_c - 1) bays and
/// min(n_fc + 2, n_c) columns, full height.
double local_pancake_cost(const Scenario& scenario, const MemberDesign& design, int n_fc);

/// k_brittle times the construction cost at lambda = (1, 1).
double global_pancake_cost(const Scenario& scenario, const MemberDesign& design);

struct CostBreakdown {
    double c_ref = 0.0;
    double c_construction = 0.0;
    double c_initial_damage = 0.0;
    double c_bending = 0.0;
    double c_local_pancake = 0.0;
    double c_global_pancake = 0.0;
};

/// Every cost term for the given design point, with failure costs at n_fc.
CostBreakdown cost_breakdown(const Scenario& scenario, const MemberDesign& design,
                             const DesignFactors& factors, int n_fc);

}  // namespace riskframe
