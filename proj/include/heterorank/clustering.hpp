#ifndef HETERORANK_CLUSTERING_HPP
#define HETERORANK_CLUSTERING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "heterorank/gadget.hpp"
#include "heterorank/model.hpp"
#include "heterorank/quicksort.hpp"
#include "heterorank/tournament.hpp"

namespace hr {

struct FindConfig {
    // Degree-test threshold c. 0 derives the canonical 1/4 * eps * p_m.
    double density_threshold = 0.0;
    // Depth d: once copy_cap copies were found, an attempt that embeds more
    // than d vertices is abandoned and re-randomized; failure pairs then come
    // from shallow stalls only, and the edge deletion driven by found copies
    // is throttled to one copy per restart budget. 0 disables the policy.
    std::uint32_t depth = 0;
    std::uint32_t copy_cap = 15;
    // Window members sampled per degree test; 0 tests exactly. Sampling can
    // only miss embeddings: pairs are re-bucketed exactly before returning.
    std::uint32_t sample_size = 0;
    // Abandoned attempts before one final attempt runs without the depth cap.
    std::uint32_t max_restarts = 32;
};

// A located copy of the gadget: matched[i] plays pattern_order[i].
struct FindCopy {
    std::vector<std::uint32_t> pattern_order; // gadget vertices, assignment order
    std::vector<std::uint32_t> matched;       // tournament vertices, same order

    // Every unordered pair among the matched vertices.
    std::vector<VertexPair> pairs() const;
};

// A failed scan: every x in X has degree at most c|Y| into Y in the required
// direction (out when required_out, in otherwise).
struct FindPair {
    VertexSet x;
    VertexSet y;
    bool required_out = true;
    std::uint32_t embedded = 0;    // |S| when the scan stalled
    std::uint32_t window_size = 0; // |W_j| of the failed scan
};

struct FindOutcome {
    std::optional<FindCopy> copy;
    std::optional<FindPair> pair;
    std::uint32_t restarts = 0;
    bool aborted = false; // attempt hit the depth cap; retried inside find

    bool is_copy() const { return copy.has_value(); }
};

// One embedding attempt from explicit windows; pattern_order[0] is looked up
// in windows[0] and so on. Exposed for direct exercise of the search.
// abort_above > 0 abandons the attempt as soon as more than that many
// vertices are embedded (neither copy nor pair in the outcome).
FindOutcome run_searcher(const Tournament& t1, const Gadget& gadget,
                         std::span<const std::uint32_t> pattern_order,
                         std::vector<VertexSet> windows, double c,
                         std::uint32_t sample_size, std::uint64_t seed,
                         std::uint32_t abort_above = 0);

// Random equal windows over the alive vertices (surplus left out of the
// attempt), randomized pattern order, then the searcher; retries per the
// FindConfig stall policy. Throws SizeLimitError when |alive| < |gadget|.
FindOutcome find_embedding(const Gadget& gadget, const Tournament& t1,
                           const VertexSet& alive, double eps, double p_m,
                           const FindConfig& cfg, std::uint64_t copies_found,
                           std::uint64_t seed);

struct Partitioning {
    std::vector<VertexSet> clusters;
    VertexSet remainder;

    std::uint32_t covered() const {
        std::uint32_t c = 0;
        for (const auto& s : clusters) c += s.count();
        return c;
    }
};

struct ClusterEvent {
    std::uint64_t find_run = 0; // 1-based index of the find call
    bool copy = false;
    std::vector<std::uint32_t> extracted; // Z, empty for copy events
    std::int32_t merged_into = -1;        // cluster index, -1 = appended new
};

struct ClusterResult {
    Partitioning partition;
    std::uint64_t find_runs = 0;
    std::uint64_t copies_found = 0;
    std::uint64_t pairs_deleted = 0;
    std::vector<ClusterEvent> trace;
};

struct ClusterConfig {
    FindConfig find;
    QuickSortConfig quicksort;
};

// The clustering loop: locate gadget copies in the damaged working copy and
// delete their edges; when the search fails, the failure pair Z = X u Y is
// merged into the first existing cluster whose joint ranking stays under the
// backward-edge budget (het/6 + 2 eps) |Z||P_i| p_u, judged on the original
// tournament, else appended as a new cluster. Stops when fewer than an
// eps-fraction of vertices remain unextracted.
ClusterResult cluster_tournament(const Tournament& t, const Bounds& bounds,
                                 double eps, const Gadget& gadget,
                                 const ClusterConfig& cfg, std::uint64_t seed);

} // namespace hr

#endif
