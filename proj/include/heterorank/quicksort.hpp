#ifndef HETERORANK_QUICKSORT_HPP
#define HETERORANK_QUICKSORT_HPP

#include <cstdint>

#include "heterorank/tournament.hpp"

namespace hr {

struct QuickSortConfig {
    // 0 selects ceil(log2 |scope|) capped at 8; in practice a few runs are
    // enough and more do not pay for themselves.
    std::uint32_t runs = 0;

    std::uint32_t effective_runs(std::uint32_t scope_size) const;
};

// Recursive pivot partition of `scope`: the pivot is drawn uniformly from
// pivots intersected with the branch, in-neighbors land before the pivot,
// out-neighbors after; deleted pairs pick a side by fair coin. Branches that
// run out of pivots are laid out in seeded random order.
Ordering quicksort_rank(const Tournament& t, const VertexSet& scope,
                        const VertexSet& pivots, std::uint64_t seed);

// Minimum-backward-edge ordering among cfg.runs independent runs; ties keep
// the earliest run.
Ordering best_of_runs(const Tournament& t, const VertexSet& scope,
                      const VertexSet& pivots, const QuickSortConfig& cfg,
                      std::uint64_t seed);

struct ExactFas {
    std::uint64_t backward = 0;
    Ordering order;
};

// True minimum backward-edge count over all orderings of the scope.
// Subset dynamic program; refuses scopes above 10 vertices.
ExactFas exact_min_fas(const Tournament& t, const VertexSet& scope);

} // namespace hr

#endif
