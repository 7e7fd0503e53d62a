#include "heterorank/quicksort.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "heterorank/rng.hpp"

namespace hr {

std::uint32_t QuickSortConfig::effective_runs(std::uint32_t scope_size) const {
    if (runs > 0) return runs;
    if (scope_size < 2) return 1;
    std::uint32_t log2n = std::bit_width(scope_size - 1); // ceil(log2 n)
    return std::min<std::uint32_t>(std::max<std::uint32_t>(log2n, 1), 8);
}

namespace {

void quicksort_branch(const Tournament& t, std::vector<std::uint32_t>& branch,
                      const VertexSet& pivots, Rng& rng, Ordering& out) {
    if (branch.empty()) return;
    if (branch.size() == 1) {
        out.push_back(branch[0]);
        return;
    }
    // pivot candidates within this branch
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t v : branch) {
        if (pivots.contains(v)) candidates.push_back(v);
    }
    if (candidates.empty()) {
        // fallback: seeded random layout of the pivot-free branch
        rng.shuffle(branch);
        for (std::uint32_t v : branch) out.push_back(v);
        return;
    }
    std::uint32_t pivot = candidates[rng.below(static_cast<std::uint32_t>(candidates.size()))];
    std::vector<std::uint32_t> before, after;
    before.reserve(branch.size());
    after.reserve(branch.size());
    for (std::uint32_t v : branch) {
        if (v == pivot) continue;
        switch (t.direction(v, pivot)) {
        case EdgeState::forward: before.push_back(v); break;  // v -> pivot
        case EdgeState::backward: after.push_back(v); break;  // pivot -> v
        case EdgeState::deleted:
            (rng.bernoulli(0.5) ? before : after).push_back(v);
            break;
        }
    }
    quicksort_branch(t, before, pivots, rng, out);
    out.push_back(pivot);
    quicksort_branch(t, after, pivots, rng, out);
}

} // namespace

Ordering quicksort_rank(const Tournament& t, const VertexSet& scope,
                        const VertexSet& pivots, std::uint64_t seed) {
    Ordering out;
    std::vector<std::uint32_t> branch = scope.to_vector();
    out.reserve(branch.size());
    Rng rng(derive_seed(seed, 0x71736f72ULL));
    quicksort_branch(t, branch, pivots, rng, out);
    return out;
}

Ordering best_of_runs(const Tournament& t, const VertexSet& scope,
                      const VertexSet& pivots, const QuickSortConfig& cfg,
                      std::uint64_t seed) {
    std::uint32_t runs = cfg.effective_runs(scope.count());
    Ordering best;
    std::uint64_t best_backward = 0;
    for (std::uint32_t r = 0; r < runs; ++r) {
        Ordering candidate = quicksort_rank(t, scope, pivots, derive_seed(seed, r));
        std::uint64_t backward = t.backward_edges(candidate);
        if (r == 0 || backward < best_backward) {
            best = std::move(candidate);
            best_backward = backward;
        }
    }
    return best;
}

ExactFas exact_min_fas(const Tournament& t, const VertexSet& scope) {
    std::vector<std::uint32_t> vs = scope.to_vector();
    std::size_t m = vs.size();
    if (m > 10) {
        throw SizeLimitError("exact_min_fas guard: scope of " + std::to_string(m) +
                             " vertices exceeds 10");
    }
    if (m == 0) return {};
    // cost(S) = min over orderings of S; appending v last adds the present
    // edges v -> (S minus v), which all become backward.
    std::uint32_t full = (1u << m) - 1;
    std::vector<std::uint32_t> cost(full + 1, ~0u);
    std::vector<std::int32_t> last(full + 1, -1);
    cost[0] = 0;
    for (std::uint32_t s = 1; s <= full; ++s) {
        for (std::uint32_t i = 0; i < m; ++i) {
            if (!(s >> i & 1)) continue;
            std::uint32_t rest = s & ~(1u << i);
            if (cost[rest] == ~0u) continue;
            std::uint32_t add = 0;
            for (std::uint32_t j = 0; j < m; ++j) {
                if ((rest >> j & 1) && t.has_edge(vs[i], vs[j])) ++add;
            }
            if (cost[rest] + add < cost[s]) {
                cost[s] = cost[rest] + add;
                last[s] = static_cast<std::int32_t>(i);
            }
        }
    }
    ExactFas out;
    out.backward = cost[full];
    out.order.resize(m);
    std::uint32_t s = full;
    for (std::size_t pos = m; pos-- > 0;) {
        std::uint32_t i = static_cast<std::uint32_t>(last[s]);
        out.order[pos] = vs[i];
        s &= ~(1u << i);
    }
    return out;
}

} // namespace hr
