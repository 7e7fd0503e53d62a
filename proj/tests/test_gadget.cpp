#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "heterorank/gadget.hpp"

using namespace hr;

TEST_CASE("minimum gadget order from the sizing inequality") {
    // k_u=2, p=1/2: rhs = 2 (1 + ln 2) ~ 3.386; first h passing is 59
    CHECK(min_gadget_size(2, 0.5) == 59);
    // larger k_u never shrinks the order
    std::uint32_t prev = 0;
    for (std::uint32_t ku = 2; ku <= 6; ++ku) {
        std::uint32_t h = min_gadget_size(ku, 0.5);
        CHECK(h >= prev);
        prev = h;
    }
    // the reference experimental order 60 satisfies the k_u=2, p=1/2 condition
    double rhs = 2.0 * (1.0 - std::log(0.5));
    CHECK(60.0 / (4.0 * std::log(60.0) + 1.0) >= rhs);
    CHECK_THROWS_AS(min_gadget_size(1, 0.5), ConfigError);
    CHECK_THROWS_AS(min_gadget_size(2, 1.0), ConfigError);
}

TEST_CASE("random gadgets") {
    CHECK(random_gadget(5, 3).pattern.present_pair_count() == 10);
    // determinism
    Gadget a = random_gadget(8, 77);
    Gadget b = random_gadget(8, 77);
    CHECK(a.pattern.edges() == b.pattern.edges());
    // at h=3 both triangle types appear across seeds
    bool saw_cycle = false, saw_transitive = false;
    for (std::uint64_t seed = 0; seed < 64 && !(saw_cycle && saw_transitive); ++seed) {
        Gadget g = random_gadget(3, seed);
        bool trans = induced_transitive(g.pattern, {0, 1, 2});
        saw_cycle |= !trans;
        saw_transitive |= trans;
    }
    CHECK(saw_cycle);
    CHECK(saw_transitive);
    CHECK_THROWS_AS(random_gadget(2, 0), ConfigError);
}

TEST_CASE("quadratic residue construction") {
    Gadget qr7 = quadratic_residue_gadget(7);
    // residues mod 7 are {1, 2, 4}
    CHECK(qr7.pattern.has_edge(0, 1));
    CHECK(qr7.pattern.has_edge(3, 0)); // (0 - 3) mod 7 = 4, a residue
    CHECK_FALSE(qr7.pattern.has_edge(0, 3));
    // vertex-transitive: every out-degree is 3
    VertexSet all = VertexSet::full(7);
    for (std::uint32_t v = 0; v < 7; ++v) CHECK(qr7.pattern.out_degree_in(v, all) == 3);
    // exactly one direction per pair (p = 3 mod 4 makes -1 a non-residue)
    CHECK(qr7.pattern.present_pair_count() == 21);

    CHECK_THROWS_AS(quadratic_residue_gadget(6), ConfigError);  // not prime
    CHECK_THROWS_AS(quadratic_residue_gadget(13), ConfigError); // 1 mod 4
}

TEST_CASE("verification of the 7-vertex quadratic residue gadget") {
    Gadget qr7 = quadratic_residue_gadget(7);
    GadgetVerifyResult r = verify_gadget(qr7, 2, true);
    CHECK(r.ok);
    CHECK(qr7.verified == GadgetVerification::exhaustive);
    CHECK(r.subsets_checked == 35); // C(7,4)
    // cross-check against the independent exhaustive oracle
    CHECK(qr7.pattern.max_transitive_subset() == 3);
}

TEST_CASE("verification counterexamples and guards") {
    Gadget trans{transitive_tournament(6), 0, GadgetVerification::unverified};
    GadgetVerifyResult r = verify_gadget(trans, 2, true);
    CHECK_FALSE(r.ok);
    REQUIRE(r.counterexample.has_value());
    CHECK(induced_transitive(trans.pattern, *r.counterexample));
    CHECK(r.counterexample->size() == 3);

    // the 3-cycle is a gadget for k_u = 1
    Tournament::Builder b(3);
    b.orient(0, 1);
    b.orient(1, 2);
    b.orient(2, 0);
    Gadget cyc{std::move(b).build(), 0, GadgetVerification::unverified};
    CHECK(verify_gadget(cyc, 1, true).ok);

    Gadget big = random_gadget(60, 1);
    CHECK_THROWS_AS(verify_gadget(big, 2, true), SizeLimitError);
    // sampled mode works on the same instance
    GadgetVerifyResult sampled = verify_gadget(big, 2, false, 500, 9);
    CHECK(sampled.subsets_checked <= 500);
}

TEST_CASE("exhaustive verification agrees with the max-transitive oracle") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Gadget g = random_gadget(9, 1000 + seed);
        std::uint32_t need = (9 + 1) / 2; // ceil(9/2)
        bool property = g.pattern.max_transitive_subset() < need;
        GadgetVerifyResult r = verify_gadget(g, 2, true);
        CHECK(r.ok == property);
    }
}

TEST_CASE("sampled verification never passes a gadget the oracle rejects outright") {
    // sampling can miss counterexamples but must find one in a transitive
    // pattern quickly
    Gadget trans{transitive_tournament(10), 0, GadgetVerification::unverified};
    GadgetVerifyResult r = verify_gadget(trans, 2, false, 200, 3);
    CHECK_FALSE(r.ok);
}

TEST_CASE("random-gadget success rate dominates the sizing bound at h=21, k_u=3") {
    // The inverted sizing inequality certifies only a vacuous probability at
    // this order (it is far below the k_u=3 sizing threshold), so the check
    // is that the empirical rate is not below it.
    double bound = gadget_success_bound(21, 3);
    CHECK(bound < 1.0);
    int ok = 0;
    const int total = 60;
    for (int seed = 0; seed < total; ++seed) {
        Gadget g = random_gadget(21, 5000 + seed);
        if (verify_gadget(g, 3, true).ok) ++ok;
    }
    double rate = static_cast<double>(ok) / total;
    CHECK(rate >= bound);
}
