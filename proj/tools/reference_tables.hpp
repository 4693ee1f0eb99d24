#pragma once

// Regeneration of the published reliability and strengthening tables and of
// the data behind the optimal-design and threshold figures.

#include <filesystem>
#include <string>
#include <vector>

#include "riskframe/csv.hpp"
#include "riskframe/optimize.hpp"
#include "riskframe/svg.hpp"

namespace riskframe::tables {

/// Reliability indexes of the reference frame. Columns: intact NLC design,
/// intact strengthened, damaged, optimized. Rows: horizon x mode.
struct ReliabilityTable {
    struct Row {
        std::string horizon;  ///< "apt" or "50"
        std::string mode;
        double nlc = 0.0, strengthened = 0.0, damaged = 0.0, optimized = 0.0;
        bool intact_defined = true;  ///< false for local pancake
        DesignFactors optimized_lambda;
    };
    std::vector<Row> rows;
    DesignFactors catenary_optimum;  ///< lambda* with catenary on the damaged frame, p_LD = 0.1
};

/// `optimized` is the lambda for the non-catenary optimized cells.
ReliabilityTable reliability_table(const DesignFactors& optimized = {0.9, 1.3});
CsvTable reliability_table_csv(const ReliabilityTable& t);

struct StrengtheningEntry {
    std::string frame;
    std::string damage;
    double B_sf = 0.0;
    double R_sf = 0.0;
};
std::vector<StrengtheningEntry> strengthening_table();
CsvTable strengthening_table_csv(const std::vector<StrengtheningEntry>& entries);

/// Half-decade grid 1e-6 ... 1.
std::vector<double> figure_p_grid();

struct FigurePoint {
    std::string frame;
    double p_LD = 0.0;
    OptimizationResult optimum;
};
std::vector<FigurePoint> p_ld_curves(unsigned jobs = 0);
CsvTable p_ld_curves_csv(const std::vector<FigurePoint>& points);

struct ThresholdEntry {
    std::string frame;
    ThresholdResult result;
};
std::vector<ThresholdEntry> threshold_curve(unsigned jobs = 0);
CsvTable threshold_curve_csv(const std::vector<ThresholdEntry>& entries);

/// Writes every table and chart into `dir`; returns the written paths.
std::vector<std::filesystem::path> write_all(const std::filesystem::path& dir, unsigned jobs = 0);

}  // namespace riskframe::tables
