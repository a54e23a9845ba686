#include <cmath>

#include "catch_amalgamated.hpp"

#include "hzsim/network.hpp"

using namespace hzsim;

TEST_CASE("inner-corona nodes start with boosted energy") {
    const SimConfig cfg;
    REQUIRE(initial_energy(cfg, RegionId::M1) == Catch::Approx(1.05));
    REQUIRE(initial_energy(cfg, RegionId::M7) == Catch::Approx(0.7));

    SimConfig flat = cfg;
    flat.alpha = 0.0;
    REQUIRE(initial_energy(flat, RegionId::M1) == Catch::Approx(0.7));
}

TEST_CASE("deployment fills each region with its configured count") {
    const SimConfig cfg;
    const Zoning z = build_zoning(cfg.field_size, cfg.eta);
    RngStream rng = RngStream::derive(cfg.seed, StreamKind::Deploy);
    const std::vector<Node> nodes = deploy(cfg, z, rng);

    REQUIRE(nodes.size() == 100);
    int in_m1 = 0;
    for (const Node& n : nodes) in_m1 += n.region == RegionId::M1 ? 1 : 0;
    REQUIRE(in_m1 == 20);

    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Node& n = nodes[i];
        REQUIRE(n.id == static_cast<int>(i));
        REQUIRE(n.alive);
        REQUIRE(n.residual_energy == n.initial_energy);
        REQUIRE(assign_region(z, n.pos) == n.region);
        REQUIRE(n.initial_energy ==
                Catch::Approx(n.region == RegionId::M1 ? 1.05 : 0.7));
    }

    // Ids are dense in region order, so regions appear as contiguous blocks.
    for (std::size_t i = 1; i < nodes.size(); ++i)
        REQUIRE(region_index(nodes[i].region) >= region_index(nodes[i - 1].region));
}

TEST_CASE("deployment is a pure function of the seed") {
    const SimConfig cfg;
    const Zoning z = build_zoning(cfg.field_size, cfg.eta);

    RngStream a = RngStream::derive(42, StreamKind::Deploy);
    RngStream b = RngStream::derive(42, StreamKind::Deploy);
    const std::vector<Node> first = deploy(cfg, z, a);
    const std::vector<Node> second = deploy(cfg, z, b);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        REQUIRE(first[i].pos.x == second[i].pos.x);
        REQUIRE(first[i].pos.y == second[i].pos.y);
    }

    RngStream c = RngStream::derive(43, StreamKind::Deploy);
    const std::vector<Node> other = deploy(cfg, z, c);
    bool any_differs = false;
    for (std::size_t i = 0; i < first.size(); ++i)
        any_differs = any_differs || first[i].pos.x != other[i].pos.x;
    REQUIRE(any_differs);
}

TEST_CASE("an all-zero deployment yields an empty network") {
    SimConfig cfg;
    cfg.counts_per_region = {0, 0, 0, 0, 0, 0, 0, 0, 0};
    const Zoning z = build_zoning(cfg.field_size, cfg.eta);
    RngStream rng(1);
    REQUIRE(deploy(cfg, z, rng).empty());
}

TEST_CASE("deployment rejects impossible region counts") {
    SimConfig cfg;
    const Zoning z = build_zoning(cfg.field_size, cfg.eta);
    RngStream rng(1);

    cfg.counts_per_region[region_index(RegionId::M3)] = -1;
    REQUIRE_THROWS_AS(deploy(cfg, z, rng), ConfigError);

    SimConfig narrow;
    narrow.eta = 2;
    narrow.counts_per_region = {20, 10, 10, 10, 10, 0, 0, 0, 0};
    const Zoning z2 = build_zoning(narrow.field_size, narrow.eta);
    narrow.counts_per_region[region_index(RegionId::M6)] = 5;
    REQUIRE_THROWS_AS(deploy(narrow, z2, rng), ConfigError);
}

TEST_CASE("config validation catches out-of-range settings") {
    SimConfig ok;
    REQUIRE_NOTHROW(ok.validate());

    SimConfig bad = ok;
    bad.eta = 4;
    REQUIRE_THROWS_AS(bad.validate(), ConfigError);

    bad = ok;
    bad.attr_min = bad.attr_max;
    REQUIRE_THROWS_AS(bad.validate(), ConfigError);

    bad = ok;
    bad.channel.p_drop = 1.5;
    REQUIRE_THROWS_AS(bad.validate(), ConfigError);

    bad = ok;
    bad.p_ch = 0.0;
    REQUIRE_THROWS_AS(bad.validate(), ConfigError);

    bad = ok;
    bad.eta = 2; // nonzero outer-corona counts no longer fit
    REQUIRE_THROWS_AS(bad.validate(), ConfigError);

    bad = ok;
    bad.runs = 0;
    REQUIRE_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("region sampling is uniform over the annular sector") {
    const Zoning z = build_zoning(100.0, 3);
    RngStream rng(314);
    const int n = 100000;

    double sum_r = 0.0;
    for (int i = 0; i < n; ++i) {
        const Point p = sample_point_in_region(z, RegionId::M2, rng);
        REQUIRE(assign_region(z, p) == RegionId::M2);
        sum_r += distance(p, z.center);
    }
    const double mean_r = sum_r / n;

    // Uniform density over the sector between radii b and 2b: the mean
    // radius is (2/3)(r2^3-r1^3)/(r2^2-r1^2) = 14b/9, and the radius
    // variance is (r1^2+r2^2)/2 minus that mean squared.
    const double b = z.beta;
    const double expect = 14.0 * b / 9.0;
    const double var = 2.5 * b * b - expect * expect;
    const double sigma_mean = std::sqrt(var / n);
    REQUIRE(std::abs(mean_r - expect) <= 3.0 * sigma_mean);
}
