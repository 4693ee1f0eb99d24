#include "riskframe/cost.hpp"

#include <algorithm>

namespace riskframe {

namespace {

double strengthened_story_cost(double lambda, double alpha, double factor) {
    return lambda * alpha * factor + (1.0 - alpha);
}

// Linear cost of `bays` full-height bays and `columns` full-height column
// lines at lambda = (1, 1).
double extent_cost(const Scenario& s, const MemberDesign& d, int bays, int columns) {
    const auto& g = s.geometry;
    const double beams = unit_beam_cost(1.0, s.costs, d.B_sf, g.n_s);
    const double cols = unit_column_cost(1.0, s.costs, d.R_sf, g.n_s);
    return bays * g.L * beams + columns * g.H * cols;
}

}  // namespace

double reference_cost(const FrameGeometry& g) {
    return g.L * g.n_s * (g.n_c - 1.0) + g.H * g.n_s * static_cast<double>(g.n_c);
}

double unit_beam_cost(double lambda_B, const CostParameters& costs, double B_sf, int n_s) {
    const int n = costs.n_reinf_s;
    return (n_s - n) + n * strengthened_story_cost(lambda_B, costs.alpha_B, B_sf);
}

double unit_column_cost(double lambda_C, const CostParameters& costs, double R_sf, int n_s) {
    const int n = costs.n_reinf_s;
    return (n_s - n) + n * strengthened_story_cost(lambda_C, costs.alpha_C, R_sf);
}

double construction_cost(const Scenario& s, const MemberDesign& d, const DesignFactors& f) {
    const auto& g = s.geometry;
    const double beams = g.L * (g.n_c - 1.0) * unit_beam_cost(f.lambda_B, s.costs, d.B_sf, g.n_s);
    const double cols = g.H * g.n_c * unit_column_cost(f.lambda_C, s.costs, d.R_sf, g.n_s);
    return (beams + cols) / reference_cost(g);
}

double initial_damage_cost(const Scenario& s) {
    const auto& g = s.geometry;
    return (2.0 * g.L * s.damage.n_rs0 + g.H * s.damage.n_rc0) / reference_cost(g);
}

double bending_collapse_cost(const Scenario& s, const MemberDesign& d, int n_fc) {
    const auto& g = s.geometry;
    const int bays = std::min(n_fc + 1, g.n_c - 1);
    const int columns = std::min(n_fc, g.n_c);
    return s.costs.k_ductile / reference_cost(g) * extent_cost(s, d, bays, columns);
}

double local_pancake_cost(const Scenario& s, const MemberDesign& d, int n_fc) {
    const auto& g = s.geometry;
    const int bays = std::min(n_fc + 3, g.n_c - 1);
    const int columns = std::min(n_fc + 2, g.n_c);
    return s.costs.k_brittle / reference_cost(g) * extent_cost(s, d, bays, columns);
}

double global_pancake_cost(const Scenario& s, const MemberDesign& d) {
    return s.costs.k_brittle * construction_cost(s, d, DesignFactors{1.0, 1.0});
}

CostBreakdown cost_breakdown(const Scenario& s, const MemberDesign& d, const DesignFactors& f,
                             int n_fc) {
    return {
        reference_cost(s.geometry),
        construction_cost(s, d, f),
        initial_damage_cost(s),
        bending_collapse_cost(s, d, n_fc),
        local_pancake_cost(s, d, n_fc),
        global_pancake_cost(s, d),
    };
}

}  // namespace riskframe
