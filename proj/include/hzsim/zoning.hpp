#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hzsim/errors.hpp"

namespace hzsim {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(Point a, Point b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Regions of the hemisphere-zoned field. M1 is the undivided inner disc;
// M2..M5 are the middle-corona quadrant sectors, M6..M9 the outer ones.
// M(6+q) is radially aligned with M(2+q).
enum class RegionId : int {
    M1 = 1, M2, M3, M4, M5, M6, M7, M8, M9,
};

inline constexpr int kRegionCount = 9;

inline constexpr int region_index(RegionId r) { return static_cast<int>(r) - 1; }

inline constexpr RegionId region_from_index(int i) { return static_cast<RegionId>(i + 1); }

inline constexpr int corona_of(RegionId r) {
    const int v = static_cast<int>(r);
    return v == 1 ? 1 : (v <= 5 ? 2 : 3);
}

// Quadrant 0..3 counter-clockwise from the +x axis; -1 for M1.
inline constexpr int quadrant_of(RegionId r) {
    const int v = static_cast<int>(r);
    return v == 1 ? -1 : (v <= 5 ? v - 2 : v - 6);
}

inline constexpr RegionId make_region(int corona, int quadrant) {
    return corona == 1 ? RegionId::M1
                       : static_cast<RegionId>((corona == 2 ? 2 : 6) + quadrant);
}

inline constexpr RegionId outer_of(RegionId middle) {
    return make_region(3, quadrant_of(middle));
}

inline constexpr RegionId middle_of(RegionId outer) {
    return make_region(2, quadrant_of(outer));
}

inline constexpr bool is_middle(RegionId r) { return corona_of(r) == 2; }
inline constexpr bool is_outer(RegionId r) { return corona_of(r) == 3; }

inline std::string to_string(RegionId r) {
    return "M" + std::to_string(static_cast<int>(r));
}

// Concentric-corona partition of a square field, centered on the base
// station. eta coronas of width beta, coronas 2 and 3 sliced into
// axis-aligned quadrant sectors.
struct Zoning {
    Point center;
    double field_size = 0.0;
    int eta = 3;
    double beta = 0.0;

    double outer_radius() const { return eta * beta; }

    // Number of regions this zoning defines: 1, 5, or 9.
    int region_count() const { return eta == 1 ? 1 : (eta == 2 ? 5 : 9); }

    bool has_region(RegionId r) const { return corona_of(r) <= eta; }
};

// beta is fixed at field_size / (2*eta) so the outermost circle is
// inscribed in the square. The region naming scheme covers up to three
// coronas, so eta is capped at 3.
inline Zoning build_zoning(double field_size, int eta) {
    if (!(field_size > 0.0))
        throw NonPositiveField("field_size must be > 0, got " + std::to_string(field_size));
    if (eta < 1)
        throw BadEta("eta must be >= 1, got " + std::to_string(eta));
    if (eta > 3)
        throw BadEta("eta must be <= 3 (regions are named M1..M9), got " + std::to_string(eta));
    Zoning z;
    z.center = {field_size / 2.0, field_size / 2.0};
    z.field_size = field_size;
    z.eta = eta;
    z.beta = field_size / (2.0 * eta);
    return z;
}

// Angle of p around the zoning center, in [0, 2*pi).
inline double angle_of(const Zoning& z, Point p) {
    double th = std::atan2(p.y - z.center.y, p.x - z.center.x);
    if (th < 0.0) th += 2.0 * std::numbers::pi;
    if (th >= 2.0 * std::numbers::pi) th = 0.0;
    return th;
}

// Quadrant of an angle in [0, 2*pi): half-open slices so boundary angles
// belong to the counter-clockwise-next quadrant.
inline int quadrant_of_angle(double theta) {
    const int q = static_cast<int>(theta / (std::numbers::pi / 2.0));
    return q & 3;
}

// Corona shells are half-open on the inside: corona c covers
// ((c-1)*beta, c*beta], with r = 0 in corona 1.
inline RegionId assign_region(const Zoning& z, Point p) {
    const double r = distance(p, z.center);
    if (r > z.outer_radius())
        throw OutOfZone("point at radius " + std::to_string(r) + " is outside the outer corona (" +
                        std::to_string(z.outer_radius()) + ")");
    int corona = 1;
    if (r > z.beta) corona = (r > 2.0 * z.beta) ? 3 : 2;
    if (corona == 1) return RegionId::M1;
    return make_region(corona, quadrant_of_angle(angle_of(z, p)));
}

/// Polar midpoint of the annular sector: mid radius, quadrant bisector.
// For M1 this is the zoning center.
inline Point region_midpoint(const Zoning& z, RegionId id) {
    if (!z.has_region(id))
        throw Error("region " + to_string(id) + " does not exist for eta=" + std::to_string(z.eta));
    if (id == RegionId::M1) return z.center;
    const int corona = corona_of(id);
    const double r_mid = (corona - 0.5) * z.beta;
    const double theta = (quadrant_of(id) + 0.5) * (std::numbers::pi / 2.0);
    return {z.center.x + r_mid * std::cos(theta), z.center.y + r_mid * std::sin(theta)};
}

// Which half of its quadrant an angle falls in, split at the bisector.
// The bisector itself belongs to the upper half.
enum class QuadrantSide { Lower, Upper };

inline QuadrantSide quadrant_side(const Zoning& z, Point p) {
    const double theta = angle_of(z, p);
    const int q = quadrant_of_angle(theta);
    const double rel = theta - q * (std::numbers::pi / 2.0);
    return rel < std::numbers::pi / 4.0 ? QuadrantSide::Lower : QuadrantSide::Upper;
}

} // namespace hzsim
