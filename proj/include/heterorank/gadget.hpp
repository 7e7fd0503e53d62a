#ifndef HETERORANK_GADGET_HPP
#define HETERORANK_GADGET_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "heterorank/tournament.hpp"

namespace hr {

enum class GadgetVerification {
    unverified,
    sampled,
    exhaustive,
};

// Small pattern tournament used by the clustering search. The property that
// matters: every subset of ceil(h / k_u) vertices induces a non-transitive
// subtournament, i.e. keeps a backward edge under every ordering.
struct Gadget {
    Tournament pattern;
    std::uint32_t k_u = 0; // bound the verification ran against
    GadgetVerification verified = GadgetVerification::unverified;

    std::uint32_t order() const { return pattern.order(); }
};

// Smallest h with h / (4 ln h + 1) >= k_u (1 - ln(1 - p)): above this order a
// uniformly random tournament has the gadget property with probability >= p.
std::uint32_t min_gadget_size(std::uint32_t k_u, double p);

// Inverse of the sizing inequality: the success probability the bound
// certifies for a given order (may be <= 0 when it certifies nothing).
double gadget_success_bound(std::uint32_t h, std::uint32_t k_u);

Gadget random_gadget(std::uint32_t h, std::uint64_t seed);

// Quadratic-residue tournament on Z_p for a prime p = 3 (mod 4):
// edge i -> j iff (j - i) mod p is a nonzero quadratic residue.
Gadget quadratic_residue_gadget(std::uint32_t p);

struct GadgetVerifyResult {
    bool ok = false;
    // A transitive subset of size ceil(h/k_u) when verification fails.
    std::optional<std::vector<std::uint32_t>> counterexample;
    std::uint64_t subsets_checked = 0;
};

// Exhaustive mode enumerates every subset of size exactly ceil(h/k_u); the
// guard refuses above 10^7 subsets. Sampled mode checks `trials` random
// subsets and can only report a probabilistic "ok".
GadgetVerifyResult verify_gadget(Gadget& gadget, std::uint32_t k_u, bool exhaustive,
                                 std::uint64_t trials = 0, std::uint64_t seed = 0);

// True iff the subtournament induced by the subset is transitive: ordering
// its vertices by in-subset out-degree yields zero backward edges.
bool induced_transitive(const Tournament& t, const std::vector<std::uint32_t>& subset);

} // namespace hr

#endif
