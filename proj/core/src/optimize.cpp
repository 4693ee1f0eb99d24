#include "riskframe/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace riskframe {

std::string_view to_string(ThresholdStatus status) noexcept {
    switch (status) {
        case ThresholdStatus::Bracketed: return "bracketed";
        case ThresholdStatus::AlwaysStrengthen: return "always-strengthen";
        case ThresholdStatus::NeverStrengthen: return "never-strengthen";
    }
    return "bracketed";
}

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out;
    if (n == 1) return {0.5 * (lo + hi)};
    for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
    return out;
}

bool better(double f, const DesignFactors& x, double f_best, const DesignFactors& x_best) {
    if (f != f_best) return f < f_best;
    if (x.lambda_B != x_best.lambda_B) return x.lambda_B < x_best.lambda_B;
    return x.lambda_C < x_best.lambda_C;
}

}  // namespace

OptimizationResult minimize_total_cost(const ExpectedCostModel& model, double p_LD,
                                       const OptimizerOptions& opt) {
    const auto clamp = [&](double v) { return std::clamp(v, opt.lambda_min, opt.lambda_max); };
    const auto objective = [&](const std::array<double, 2>& x) {
        return model.total(DesignFactors{clamp(x[0]), clamp(x[1])}, p_LD);
    };

    std::vector<std::array<double, 2>> starts;
    const auto axis = linspace(opt.grid_lo, opt.grid_hi, opt.grid_points);
    for (double b : axis)
        for (double c : axis) starts.push_back({b, c});
    starts.push_back({1.0, 1.0});

    OptimizationResult best;
    std::optional<DesignFactors> best_x;
    int evaluations = 0;
    for (const auto& start : starts) {
        if (!std::isfinite(objective(start))) continue;
        ++evaluations;
        const auto run = nelder_mead(objective, start, opt.simplex);
        evaluations += run.evaluations;
        ++best.starts_used;
        const DesignFactors x{clamp(run.x[0]), clamp(run.x[1])};
        const double f = model.total(x, p_LD);
        if (!std::isfinite(f)) continue;
        if (!best_x || better(f, x, best.c_te_star, *best_x)) {
            best_x = x;
            best.c_te_star = f;
            best.converged = run.converged;
        }
    }
    if (!best_x) throw NumericalError("minimize_total_cost: objective not finite at any start");

    const auto& s = model.scenario();
    const auto& d = model.design();
    best.lambda_star = *best_x;
    best.evaluations = evaluations;
    best.damaged_betas = damaged_betas(s, d, best.lambda_star, s.damage.n_rc0, s.damage.n_rs0,
                                       Horizon::ArbitraryPointInTime);
    best.intact_betas = intact_betas(s, d, best.lambda_star, Horizon::FiftyYear);
    best.beta_B_objective = beta_damaged(s, d, best.lambda_star, s.damage.n_rc0, s.damage.n_rs0,
                                         damaged_bending_mode(s), Horizon::ArbitraryPointInTime);
    return best;
}

OptimizationResult minimize_total_cost(const Scenario& scenario, const MemberDesign& design,
                                       const OptimizerOptions& options) {
    const ExpectedCostModel model(scenario, design);
    return minimize_total_cost(model, scenario.p_LD, options);
}

ThresholdResult threshold_probability(const Scenario& scenario, const MemberDesign& design,
                                      const ThresholdOptions& opt) {
    const ExpectedCostModel model(scenario, design);
    ThresholdResult out;
    const auto g = [&](double log10_p) {
        ++out.optimizations;
        return minimize_total_cost(model, std::pow(10.0, log10_p), opt.optimizer).beta_B_objective;
    };

    double lo = opt.log10_lo, hi = opt.log10_hi;
    double g_lo = g(lo), g_hi = g(hi);
    if (g_lo == 0.0) {
        hi = lo;
        g_hi = g_lo;
    } else if (g_hi == 0.0) {
        lo = hi;
        g_lo = g_hi;
    }

    if ((g_lo > 0.0 && g_hi > 0.0) || (g_lo < 0.0 && g_hi < 0.0)) {
        out.status = g_lo > 0.0 ? ThresholdStatus::AlwaysStrengthen : ThresholdStatus::NeverStrengthen;
    } else {
        while (hi - lo > opt.log10_tol) {
            const double mid = 0.5 * (lo + hi);
            const double g_mid = g(mid);
            if (g_mid == 0.0) {
                lo = hi = mid;
                g_lo = g_hi = 0.0;
                break;
            }
            if ((g_mid < 0.0) == (g_lo < 0.0)) {
                lo = mid;
                g_lo = g_mid;
            } else {
                hi = mid;
                g_hi = g_mid;
            }
        }
        out.status = ThresholdStatus::Bracketed;
        out.p_LD_th = std::pow(10.0, 0.5 * (lo + hi));
    }
    out.log10_lo = lo;
    out.log10_hi = hi;
    out.beta_at_lo = g_lo;
    out.beta_at_hi = g_hi;

    const double p_report =
        out.status == ThresholdStatus::Bracketed ? out.p_LD_th : std::pow(10.0, opt.log10_hi);
    out.c_te_strengthened = model.total(DesignFactors{1.0, 1.0}, p_report);
    const auto [normal_scenario, normal_design] = normal_frame(scenario, design);
    out.c_te_normal = ExpectedCostModel(normal_scenario, normal_design)
                          .total(DesignFactors{1.0, 1.0}, p_report);
    return out;
}

}  // namespace riskframe
