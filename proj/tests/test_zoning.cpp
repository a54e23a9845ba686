#include <array>
#include <cmath>

#include "catch_amalgamated.hpp"

#include "hzsim/rng.hpp"
#include "hzsim/zoning.hpp"

using namespace hzsim;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("corona width follows the inscribed-circle rule") {
    const Zoning z = build_zoning(100.0, 3);
    REQUIRE(z.center.x == Catch::Approx(50.0));
    REQUIRE(z.center.y == Catch::Approx(50.0));
    REQUIRE(z.beta == Catch::Approx(16.6667).margin(1e-3));
    REQUIRE(z.outer_radius() == Catch::Approx(50.0));

    const Zoning single = build_zoning(100.0, 1);
    REQUIRE(single.beta == Catch::Approx(50.0));
    REQUIRE(single.has_region(RegionId::M1));
    REQUIRE_FALSE(single.has_region(RegionId::M2));
    REQUIRE_FALSE(single.has_region(RegionId::M6));

    const Zoning wide = build_zoning(200.0, 3);
    REQUIRE(wide.beta == Catch::Approx(33.3333).margin(1e-3));
}

TEST_CASE("zoning construction rejects bad arguments") {
    REQUIRE_THROWS_AS(build_zoning(0.0, 3), NonPositiveField);
    REQUIRE_THROWS_AS(build_zoning(-5.0, 3), NonPositiveField);
    REQUIRE_THROWS_AS(build_zoning(100.0, 0), BadEta);
    REQUIRE_THROWS_AS(build_zoning(100.0, -1), BadEta);
    REQUIRE_THROWS_AS(build_zoning(100.0, 4), BadEta);
}

TEST_CASE("region ids map between corona and quadrant") {
    REQUIRE(make_region(1, 0) == RegionId::M1);
    REQUIRE(make_region(2, 0) == RegionId::M2);
    REQUIRE(make_region(2, 3) == RegionId::M5);
    REQUIRE(make_region(3, 0) == RegionId::M6);
    REQUIRE(make_region(3, 3) == RegionId::M9);

    for (int q = 0; q < 4; ++q) {
        const RegionId middle = make_region(2, q);
        const RegionId outer = make_region(3, q);
        REQUIRE(outer_of(middle) == outer);
        REQUIRE(middle_of(outer) == middle);
        REQUIRE(quadrant_of(middle) == q);
        REQUIRE(quadrant_of(outer) == q);
        REQUIRE(corona_of(middle) == 2);
        REQUIRE(corona_of(outer) == 3);
    }
    REQUIRE(corona_of(RegionId::M1) == 1);
    REQUIRE(quadrant_of(RegionId::M1) == -1);
    REQUIRE(to_string(RegionId::M7) == "M7");
}

TEST_CASE("points assign to the expected regions") {
    const Zoning z = build_zoning(100.0, 3);

    REQUIRE(assign_region(z, z.center) == RegionId::M1);
    REQUIRE(assign_region(z, {70.0, 70.0}) == RegionId::M2);
    REQUIRE(assign_region(z, {50.0, 95.0}) == RegionId::M7);

    // One cardinal direction per quadrant, in both sliced coronas.
    REQUIRE(assign_region(z, {75.0, 50.0}) == RegionId::M2);
    REQUIRE(assign_region(z, {50.0, 75.0}) == RegionId::M3);
    REQUIRE(assign_region(z, {25.0, 50.0}) == RegionId::M4);
    REQUIRE(assign_region(z, {50.0, 25.0}) == RegionId::M5);
    REQUIRE(assign_region(z, {95.0, 50.0}) == RegionId::M6);
    REQUIRE(assign_region(z, {50.0, 95.0}) == RegionId::M7);
    REQUIRE(assign_region(z, {5.0, 50.0}) == RegionId::M8);
    REQUIRE(assign_region(z, {50.0, 5.0}) == RegionId::M9);
}

TEST_CASE("shell boundaries are half-open and corner points are rejected") {
    // A 96 m field makes beta = 16 m exactly representable, so points can be
    // placed exactly on the shell boundaries.
    const Zoning z = build_zoning(96.0, 3);
    REQUIRE(z.beta == 16.0);

    // A radius exactly on a shell boundary belongs to the inner shell.
    REQUIRE(assign_region(z, {48.0 + 16.0, 48.0}) == RegionId::M1);
    REQUIRE(assign_region(z, {48.0 + 32.0, 48.0}) == RegionId::M2);
    REQUIRE(assign_region(z, {48.0 + 48.0, 48.0}) == RegionId::M6);

    // One representable step past the boundary tips into the next shell.
    REQUIRE(assign_region(z, {std::nextafter(64.0, 100.0), 48.0}) == RegionId::M2);
    REQUIRE(assign_region(z, {std::nextafter(80.0, 100.0), 48.0}) == RegionId::M6);
    REQUIRE_THROWS_AS(assign_region(z, {std::nextafter(96.0, 100.0), 48.0}), OutOfZone);

    // The square's corners lie outside the outer circle.
    REQUIRE_THROWS_AS(assign_region(z, {0.0, 0.0}), OutOfZone);
    REQUIRE_THROWS_AS(assign_region(z, {96.0, 96.0}), OutOfZone);
    REQUIRE_THROWS_AS(assign_region(z, {95.0, 1.0}), OutOfZone);
}

TEST_CASE("angle boundaries belong to the counter-clockwise-next quadrant") {
    REQUIRE(quadrant_of_angle(0.0) == 0);
    REQUIRE(quadrant_of_angle(kPi / 2.0) == 1);
    REQUIRE(quadrant_of_angle(kPi) == 2);
    REQUIRE(quadrant_of_angle(3.0 * kPi / 2.0) == 3);
    REQUIRE(quadrant_of_angle(kPi / 4.0) == 0);
    REQUIRE(quadrant_of_angle(7.0 * kPi / 4.0) == 3);
}

TEST_CASE("region midpoints sit on the sector bisector at mid radius") {
    const Zoning z = build_zoning(100.0, 3);

    const Point m1 = region_midpoint(z, RegionId::M1);
    REQUIRE(m1.x == Catch::Approx(50.0));
    REQUIRE(m1.y == Catch::Approx(50.0));

    const Point m2 = region_midpoint(z, RegionId::M2);
    REQUIRE(m2.x == Catch::Approx(67.678).margin(1e-3));
    REQUIRE(m2.y == Catch::Approx(67.678).margin(1e-3));

    const Point m8 = region_midpoint(z, RegionId::M8);
    REQUIRE(m8.x == Catch::Approx(20.537).margin(1e-3));
    REQUIRE(m8.y == Catch::Approx(20.537).margin(1e-3));
}

TEST_CASE("every region midpoint assigns back to its own region") {
    for (int eta = 1; eta <= 3; ++eta) {
        const Zoning z = build_zoning(100.0, eta);
        for (int idx = 0; idx < kRegionCount; ++idx) {
            const RegionId r = region_from_index(idx);
            if (!z.has_region(r)) continue;
            REQUIRE(assign_region(z, region_midpoint(z, r)) == r);
        }
    }
}

TEST_CASE("paired middle and outer regions share a quadrant") {
    const Zoning z = build_zoning(100.0, 3);
    for (int q = 0; q < 4; ++q) {
        const RegionId middle = make_region(2, q);
        const RegionId outer = make_region(3, q);
        REQUIRE(quadrant_of(assign_region(z, region_midpoint(z, middle))) ==
                quadrant_of(assign_region(z, region_midpoint(z, outer))));
    }
}

TEST_CASE("rotating a point a quarter turn advances its quadrant") {
    const Zoning z = build_zoning(100.0, 3);
    RngStream rng(2024);
    for (int i = 0; i < 500; ++i) {
        const double r = z.outer_radius() * std::sqrt(rng.uniform01());
        const double theta = rng.uniform(0.0, 2.0 * kPi);
        const Point p{z.center.x + r * std::cos(theta), z.center.y + r * std::sin(theta)};
        const Point rotated{z.center.x - (p.y - z.center.y), z.center.y + (p.x - z.center.x)};

        const RegionId before = assign_region(z, p);
        const RegionId after = assign_region(z, rotated);
        REQUIRE(corona_of(after) == corona_of(before));
        if (before != RegionId::M1)
            REQUIRE(quadrant_of(after) == (quadrant_of(before) + 1) % 4);
    }
}

TEST_CASE("in-circle points always land in exactly one region with the right share") {
    const Zoning z = build_zoning(100.0, 3);
    RngStream rng(7);
    const int n = 10000;
    std::array<int, kRegionCount> hits{};
    for (int i = 0; i < n; ++i) {
        const double r = z.outer_radius() * std::sqrt(rng.uniform01());
        const double theta = rng.uniform(0.0, 2.0 * kPi);
        const Point p{z.center.x + r * std::cos(theta), z.center.y + r * std::sin(theta)};
        hits[region_index(assign_region(z, p))] += 1;
    }

    // Area shares of the annular sectors: 1/9 for the inner disc, 1/12 per
    // middle sector, 5/36 per outer sector.
    std::array<double, kRegionCount> expected = {1.0 / 9.0,  1.0 / 12.0, 1.0 / 12.0,
                                                 1.0 / 12.0, 1.0 / 12.0, 5.0 / 36.0,
                                                 5.0 / 36.0, 5.0 / 36.0, 5.0 / 36.0};
    for (int idx = 0; idx < kRegionCount; ++idx) {
        const double p_hat = static_cast<double>(hits[idx]) / n;
        const double sigma = std::sqrt(expected[idx] * (1.0 - expected[idx]) / n);
        INFO("region " << to_string(region_from_index(idx)));
        REQUIRE(std::abs(p_hat - expected[idx]) <= 3.0 * sigma);
    }
}

TEST_CASE("quadrant halves split on the bisector, bisector included above") {
    const Zoning z = build_zoning(100.0, 3);

    REQUIRE(quadrant_side(z, {58.66, 55.0}) == QuadrantSide::Lower);  // ~30 deg
    REQUIRE(quadrant_side(z, {55.0, 58.66}) == QuadrantSide::Upper);  // ~60 deg
    REQUIRE(quadrant_side(z, {60.0, 60.0}) == QuadrantSide::Upper);   // exactly on it
    REQUIRE(quadrant_side(z, {40.0, 40.0}) == QuadrantSide::Upper);   // third-quadrant bisector
    REQUIRE(quadrant_side(z, {30.0, 45.0}) == QuadrantSide::Lower);   // ~194 deg
}
