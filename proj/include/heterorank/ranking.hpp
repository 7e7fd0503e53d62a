#ifndef HETERORANK_RANKING_HPP
#define HETERORANK_RANKING_HPP

#include <cstdint>
#include <vector>

#include "heterorank/clustering.hpp"
#include "heterorank/purify.hpp"

namespace hr {

// Clustered ranking model: a partitioning, one ordering per cluster, and the
// nonoutlier set the orderings were pivoted on.
struct RankModel {
    Partitioning partition;
    std::vector<Ordering> orderings;      // orderings[i] permutes clusters[i]
    VertexSet nonoutliers;
    std::vector<std::int32_t> cluster_of; // per vertex, -1 = remainder

    std::uint32_t n() const { return static_cast<std::uint32_t>(cluster_of.size()); }
};

struct RankBuildResult {
    RankModel model;
    ClusterResult clustering;
};

struct RankConfig {
    ClusterConfig cluster;
    PurifyConfig purify;
    bool purify_enabled = true;
};

// Full pipeline: cluster, drop outliers (against the independent check
// tournament), then rank each cluster with pivots restricted to its
// nonoutliers. check may be null when purify is disabled.
RankBuildResult hetero_rank(const Tournament& t, const Tournament* check,
                            const Bounds& bounds, double eps, const Gadget& gadget,
                            const RankConfig& cfg, std::uint64_t seed);

// Builds the model from an existing partitioning (the two later stages).
RankBuildResult rank_from_partition(const Tournament& t, const Tournament* check,
                                    const Bounds& bounds, double eps,
                                    ClusterResult clustering, const RankConfig& cfg,
                                    std::uint64_t seed);

// Same cluster: the vertex ranked earlier wins (deterministic). Anything
// else, including remainder vertices, is answered by a fair seeded coin.
std::uint32_t answer_query(const RankModel& model, std::uint32_t u, std::uint32_t v,
                           std::uint64_t seed);

// Lower bound on the expected number of correctly answered queries:
// N * M / (M + m) * (1 - 2 eps)^2 * (1 - 4 p_u).
double correct_queries_bound(double n_queries, double votes_intra, double votes_cross,
                             double eps, double p_u);

} // namespace hr

#endif
