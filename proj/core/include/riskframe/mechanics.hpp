#pragma once

// Closed-form collapse strengths of regular plane frames, expressed as the
// uniformly distributed load (kN/m) that triggers each mechanism.

#include <string_view>

#include "riskframe/model.hpp"

namespace riskframe {

enum class CollapseMode { Bending, LocalPancake, GlobalPancake, Catenary };

std::string_view to_string(CollapseMode mode) noexcept;

/// Three-hinge beam mechanism of the intact frame, 16 B_y / L^2, times the
/// catenary gain (1 + psi/8).
double intact_bending_strength(const FrameGeometry& geom, double B_y, double psi = 0.0);

/// Beam mechanism bridging n_rc removed columns: 4 B_y / (n_rc L^2), times
/// (1 + psi/4). The squared effective span is taken as n_rc L^2.
double damaged_bending_strength(const FrameGeometry& geom, double B_y, int n_rc,
                                double psi = 0.0);

/// Static crushing of every column of the intact frame.
double intact_pancake_strength(const FrameGeometry& geom, double R_c);

/// Brittle crushing of the two intact columns adjacent to the damage.
double local_pancake_strength(const FrameGeometry& geom, double R_c, int n_rc, int n_rs);

/// Brittle crushing of all remaining columns. Reduces to the intact pancake
/// strength at n_rc = 0.
double global_pancake_strength(const FrameGeometry& geom, double R_c, int n_rc, int n_rs);

}  // namespace riskframe
