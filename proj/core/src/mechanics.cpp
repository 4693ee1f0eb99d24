#include "riskframe/mechanics.hpp"

#include <string>

namespace riskframe {

std::string_view to_string(CollapseMode mode) noexcept {
    switch (mode) {
        case CollapseMode::Bending: return "bending";
        case CollapseMode::LocalPancake: return "local-pancake";
        case CollapseMode::GlobalPancake: return "global-pancake";
        case CollapseMode::Catenary: return "catenary";
    }
    return "bending";
}

namespace {

void require_capacity(double value, const char* what) {
    if (!(value > 0.0)) throw DomainError(std::string(what) + " must be positive");
}

void require_psi(double psi) {
    if (!(psi >= 0.0 && psi <= 4.0)) throw DomainError("psi must lie in [0, 4]");
}

void require_removed(const FrameGeometry& geom, int n_rc, int lo, int hi) {
    if (n_rc < lo || n_rc > hi)
        throw DomainError("n_rc = " + std::to_string(n_rc) + " outside [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "] for n_c = " + std::to_string(geom.n_c));
}

void require_stories(const FrameGeometry& geom, int n_rs) {
    if (n_rs < 0 || n_rs > geom.n_s)
        throw DomainError("n_rs = " + std::to_string(n_rs) + " outside [0, n_s]");
}

}  // namespace

double intact_bending_strength(const FrameGeometry& geom, double B_y, double psi) {
    require_capacity(B_y, "B_y");
    require_psi(psi);
    return 16.0 * B_y / (geom.L * geom.L) * (1.0 + psi / 8.0);
}

double damaged_bending_strength(const FrameGeometry& geom, double B_y, int n_rc, double psi) {
    require_capacity(B_y, "B_y");
    require_psi(psi);
    if (n_rc == 0)
        throw DomainError("damaged_bending_strength needs n_rc >= 1; use intact_bending_strength");
    require_removed(geom, n_rc, 1, geom.n_c - 2);
    return 4.0 * B_y / (n_rc * geom.L * geom.L) * (1.0 + psi / 4.0);
}

double intact_pancake_strength(const FrameGeometry& geom, double R_c) {
    require_capacity(R_c, "R_c");
    const double n_c = geom.n_c;
    return R_c / geom.L * n_c / (geom.n_s * (n_c - 1.0));
}

double local_pancake_strength(const FrameGeometry& geom, double R_c, int n_rc, int n_rs) {
    require_capacity(R_c, "R_c");
    require_removed(geom, n_rc, 1, geom.n_c - 2);
    require_stories(geom, n_rs);
    const double n_s = geom.n_s;
    const double n_c = geom.n_c;
    const double spread = 2.0 - (n_c - 1.0) / n_c + n_rc * (1.0 - n_rs / n_s);
    return R_c / geom.L / (n_s * spread);
}

double global_pancake_strength(const FrameGeometry& geom, double R_c, int n_rc, int n_rs) {
    require_capacity(R_c, "R_c");
    require_removed(geom, n_rc, 0, geom.n_c - 1);
    require_stories(geom, n_rs);
    const double n_s = geom.n_s;
    const double n_c = geom.n_c;
    const double denom = (n_c - 1.0) * (n_c + n_rc) - 2.0 * (n_rs / n_s) * n_rc * n_c;
    if (!(denom > 0.0)) throw DomainError("global_pancake_strength: degenerate geometry");
    return R_c / (geom.L * n_s) * n_c * (n_c - n_rc) / denom;
}

}  // namespace riskframe
