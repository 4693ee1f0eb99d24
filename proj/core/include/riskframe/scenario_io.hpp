#pragma once

// JSON scenario documents. Keys mirror the Scenario fields; omitted keys
// take the reference-case defaults and unknown keys are rejected.

#include <filesystem>
#include <string>
#include <string_view>

#include "riskframe/model.hpp"

namespace riskframe {

/// Malformed input document (bad JSON, unknown key, wrong type).
class ParseError : public Error {
public:
    using Error::Error;
};

Scenario parse_scenario(const std::filesystem::path& path);
Scenario parse_scenario_text(std::string_view json_text);
/// As parse_scenario_text without the final invariant check.
Scenario parse_scenario_unchecked(std::string_view json_text);

/// Full document with every field spelled out; parses back to `scenario`.
std::string scenario_to_json(const Scenario& scenario, int indent = 2);

/// "8x8" -> 8 stories, 8 bays (n_c = 9) with L = 6, H = 3.
FrameGeometry frame_from_tag(std::string_view tag);
std::string frame_tag(const FrameGeometry& geom);

/// "1x1" -> n_rc0 = 1, n_rs0 = 1.
DamageScenario damage_from_tag(std::string_view tag);

CatenaryUse catenary_from_string(std::string_view text);
ChainWeighting chain_from_string(std::string_view text);

}  // namespace riskframe
