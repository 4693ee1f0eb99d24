#pragma once

// Parameter studies: a base scenario crossed with sweep axes, executed in
// parallel and written as CSV tables and SVG charts.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "riskframe/csv.hpp"
#include "riskframe/optimize.hpp"
#include "riskframe/svg.hpp"

namespace riskframe {

/// One edit of the scenario document. `path` is dotted ("costs.k_ductile").
/// The pseudo-field "geometry.bays" stands for n_c - 1.
struct ScenarioPatch {
    enum class Op { Set, Scale };
    std::string path;
    Op op = Op::Set;
    std::string value_json;  ///< JSON literal for Set; a number for Scale
};

struct AxisVariant {
    std::string label;
    std::vector<ScenarioPatch> patches;
};

struct SweepAxis {
    std::string name;
    std::vector<AxisVariant> variants;
    bool numeric = false;  ///< labels are the swept numbers
    bool log_scale = false;
};

struct StudyDefinition {
    std::string name = "study";
    std::string base_json = "{}";  ///< partial scenario document
    std::vector<SweepAxis> axes;
    bool optimize = true;
    bool threshold = false;
    std::filesystem::path output_dir = ".";
    bool emit_csv = true;
    bool emit_svg = true;
    OptimizerOptions optimizer{};
    ThresholdOptions threshold_options{};
};

struct StudyPoint {
    std::vector<std::string> labels;  ///< one per axis
    std::vector<double> coordinates;  ///< numeric axis value, or variant index
    std::string scenario_json;        ///< patched partial document
};

struct StudyResult {
    StudyPoint point;
    std::optional<Scenario> scenario;
    MemberDesign design;
    double c_const_unit = 0.0;
    std::optional<OptimizationResult> optimum;
    std::optional<ThresholdResult> threshold;
    std::string error;  ///< empty on success
};

/// Throws ValidationError when an axis is empty or names a field the
/// scenario does not have.
void check_study(const StudyDefinition& study);

/// Cartesian product of the axes, first axis slowest.
std::vector<StudyPoint> expand(const StudyDefinition& study);

/// Reads a study document. Relative output directories resolve against
/// `base_dir`.
StudyDefinition parse_study_text(std::string_view json_text,
                                 const std::filesystem::path& base_dir = ".");
StudyDefinition parse_study(const std::filesystem::path& path);

/// Evaluates every point with up to `jobs` worker threads (0 means one per
/// hardware thread). Results are in expansion order. A failing point is
/// recorded in StudyResult::error and does not stop the others.
std::vector<StudyResult> run_study(const StudyDefinition& study, unsigned jobs = 0);

CsvTable study_table(const StudyDefinition& study, const std::vector<StudyResult>& results);

/// Charts of the optimal design factors and threshold probabilities against
/// the last axis. Empty when nothing was computed.
std::vector<std::pair<std::string, Chart>> study_charts(const StudyDefinition& study,
                                                        const std::vector<StudyResult>& results);

/// Writes <name>.csv and the charts into the output directory; returns the
/// written paths.
std::vector<std::filesystem::path> write_study_outputs(const StudyDefinition& study,
                                                       const std::vector<StudyResult>& results);

/// Built-in studies: "frames", "bay-aspect", "cost-multipliers",
/// "strengthening-cost", "initial-damage", "p-ld".
std::vector<std::string> catalog_names();
/// Throws Error for an unknown name.
StudyDefinition catalog_study(const std::string& name);

/// Frame variants of the aspect-ratio study, tall to low.
std::vector<FrameGeometry> standard_frames();

}  // namespace riskframe
