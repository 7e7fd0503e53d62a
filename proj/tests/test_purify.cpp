#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "heterorank/purify.hpp"
#include "heterorank/rng.hpp"

using namespace hr;

namespace {

// Planted cluster fixture: `domain` canonically ordered vertices with flip
// probability p, plus `outliers` vertices whose every edge is a coin flip.
Tournament planted_cluster(std::uint32_t domain, std::uint32_t outliers, double p,
                           std::uint64_t seed) {
    std::uint32_t n = domain + outliers;
    Rng rng(seed);
    Tournament::Builder b(n);
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = u + 1; v < n; ++v) {
            bool coin = u >= domain || v >= domain;
            if (coin) {
                if (rng.bernoulli(0.5)) b.orient(u, v);
                else b.orient(v, u);
            } else {
                if (rng.bernoulli(p)) b.orient(v, u);
                else b.orient(u, v);
            }
        }
    }
    return std::move(b).build();
}

// Exhaustive triangle oracle independent of the implementation path: counts
// ordered pairs (u, w) with v->u, w->v, u->w inside the cluster.
std::uint64_t triangle_oracle(const Tournament& t, const VertexSet& cluster,
                              std::uint32_t v) {
    std::uint64_t count = 0;
    auto members = cluster.to_vector();
    for (std::uint32_t u : members) {
        if (u == v || !t.has_edge(v, u)) continue;
        for (std::uint32_t w : members) {
            if (w == v || w == u) continue;
            if (t.has_edge(w, v) && t.has_edge(u, w)) ++count;
        }
    }
    return count;
}

} // namespace

TEST_CASE("triangle estimate trivial cases") {
    // source of a transitive cluster has no in-neighbors
    Tournament tr = transitive_tournament(6);
    VertexSet cluster = VertexSet::full(6);
    CHECK(triangle_estimate(tr, cluster, 0, 10, 1) == 0.0);
    CHECK(triangle_count_exact(tr, cluster, 0) == 0.0);

    // 3-cycle: single (u, w) pair closes the triangle for any sample count
    Tournament::Builder b(3);
    b.orient(0, 1);
    b.orient(1, 2);
    b.orient(2, 0);
    Tournament cyc = std::move(b).build();
    VertexSet all = VertexSet::full(3);
    for (std::uint32_t v = 0; v < 3; ++v) {
        CHECK(triangle_estimate(cyc, all, v, 7, v) == doctest::Approx(1.0));
        CHECK(triangle_count_exact(cyc, all, v) == doctest::Approx(1.0));
    }
    CHECK_THROWS_AS(triangle_estimate(cyc, all, 0, 0, 1), ConfigError);
}

TEST_CASE("exact triangle count matches the enumeration oracle") {
    Tournament t = planted_cluster(40, 5, 0.1, 3);
    VertexSet cluster = VertexSet::full(45);
    for (std::uint32_t v = 0; v < 45; v += 7) {
        CHECK(triangle_count_exact(t, cluster, v) ==
              doctest::Approx(static_cast<double>(triangle_oracle(t, cluster, v))));
    }
}

TEST_CASE("sampled estimate lands near the exact count on a noisy vertex") {
    // transitive 300-cluster plus one coin-flip vertex: estimate within 20%
    // of exact for s = ceil(30 ln n), in at least 9 of 10 seeds
    int close = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Tournament t = planted_cluster(300, 1, 0.0, 100 + seed);
        VertexSet cluster = VertexSet::full(301);
        std::uint32_t v = 300;
        double exact = triangle_count_exact(t, cluster, v);
        REQUIRE(exact > 0);
        std::uint32_t s = static_cast<std::uint32_t>(std::ceil(30.0 * std::log(301.0)));
        double estimate = triangle_estimate(t, cluster, v, s, seed);
        if (std::abs(estimate - exact) <= 0.2 * exact) ++close;
    }
    CHECK(close >= 9);
}

TEST_CASE("threshold arithmetic of the outlier rule") {
    // |P| = 1000, eps = 0.1, p_m = 0.5: (0.81/32) * 10^6 * 0.25 = 6328.125
    double threshold = (1.0 - 0.1) * (1.0 - 0.1) / 32.0 * 1000.0 * 1000.0 * 0.25;
    CHECK(threshold == doctest::Approx(6328.125));
}

TEST_CASE("a perfectly transitive cluster keeps every vertex") {
    Tournament t = transitive_tournament(120);
    Partitioning p;
    p.clusters.push_back(VertexSet::full(120));
    p.remainder = VertexSet(120);
    PurifyConfig cfg;
    VertexSet keep = purify(p, t, Bounds{0.02, 0.5, 1}, 0.1, cfg, 5);
    CHECK(keep.count() == 120);
}

TEST_CASE("purify never invents vertices and exact mode is deterministic") {
    Tournament t = planted_cluster(60, 6, 0.05, 8);
    Partitioning p;
    VertexSet cluster = VertexSet::full(66);
    cluster.erase(65); // leave one vertex unclustered
    p.clusters.push_back(cluster);
    p.remainder = VertexSet(66, {65});
    PurifyConfig cfg;
    cfg.exact = true;
    VertexSet a = purify(p, t, Bounds{0.05, 0.5, 1}, 0.1, cfg, 1);
    VertexSet b = purify(p, t, Bounds{0.05, 0.5, 1}, 0.1, cfg, 2);
    CHECK(a == b); // seed-independent in exact mode
    CHECK(a.is_subset_of(cluster));
}

TEST_CASE("planted outliers are flagged") {
    // 190 domain vertices at p=0.02 plus 10 coin-flip outliers; outlier
    // triangle counts sit an order of magnitude above domain vertices
    int flagged_total = 0, outlier_total = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Tournament check = planted_cluster(190, 10, 0.02, 900 + seed);
        Partitioning p;
        p.clusters.push_back(VertexSet::full(200));
        p.remainder = VertexSet(200);
        PurifyConfig cfg;
        VertexSet keep = purify(p, check, Bounds{0.02, 0.5, 2}, 0.1, cfg, seed);
        for (std::uint32_t v = 190; v < 200; ++v) {
            ++outlier_total;
            if (!keep.contains(v)) ++flagged_total;
        }
    }
    CHECK(flagged_total >= outlier_total * 8 / 10);
}

TEST_CASE("rewiring toward more triangles only pushes toward the outlier side") {
    // v beats everyone: zero triangles through v; reversing edges from the
    // top vertex to the bottom half creates triangles monotonically
    const std::uint32_t n = 30;
    for (std::uint32_t reversals = 0; reversals <= 10; reversals += 5) {
        Tournament::Builder b(n);
        for (std::uint32_t u = 0; u < n; ++u) {
            for (std::uint32_t v = u + 1; v < n; ++v) {
                if (u == 0 && v >= n - reversals) b.orient(v, u);
                else b.orient(u, v);
            }
        }
        Tournament t = std::move(b).build();
        VertexSet cluster = VertexSet::full(n);
        static double prev = -1.0;
        if (reversals == 0) prev = -1.0;
        double count = triangle_count_exact(t, cluster, 0);
        CHECK(count > prev);
        prev = count;
    }
}
