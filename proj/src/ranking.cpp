#include "heterorank/ranking.hpp"

#include "heterorank/rng.hpp"

namespace hr {

RankBuildResult rank_from_partition(const Tournament& t, const Tournament* check,
                                    const Bounds& bounds, double eps,
                                    ClusterResult clustering, const RankConfig& cfg,
                                    std::uint64_t seed) {
    const std::uint32_t n = t.order();
    RankBuildResult out;
    out.clustering = std::move(clustering);
    RankModel& model = out.model;
    model.partition = out.clustering.partition;
    model.cluster_of.assign(n, -1);
    for (std::size_t i = 0; i < model.partition.clusters.size(); ++i) {
        model.partition.clusters[i].for_each([&](std::uint32_t v) {
            model.cluster_of[v] = static_cast<std::int32_t>(i);
        });
    }

    Rng rng(derive_seed(seed, 0x72616e6bULL));
    if (cfg.purify_enabled) {
        if (check == nullptr) {
            throw ConfigError("ranking: purify enabled but no independent check tournament");
        }
        model.nonoutliers =
            purify(model.partition, *check, bounds, eps, cfg.purify, rng.next());
    } else {
        model.nonoutliers = VertexSet(n);
        for (const auto& cluster : model.partition.clusters) {
            model.nonoutliers |= cluster;
        }
    }

    model.orderings.reserve(model.partition.clusters.size());
    for (const auto& cluster : model.partition.clusters) {
        VertexSet pivots = cluster & model.nonoutliers;
        model.orderings.push_back(
            best_of_runs(t, cluster, pivots, cfg.cluster.quicksort, rng.next()));
    }
    return out;
}

RankBuildResult hetero_rank(const Tournament& t, const Tournament* check,
                            const Bounds& bounds, double eps, const Gadget& gadget,
                            const RankConfig& cfg, std::uint64_t seed) {
    ClusterResult clustering = cluster_tournament(t, bounds, eps, gadget,
                                                  cfg.cluster, derive_seed(seed, 1));
    return rank_from_partition(t, check, bounds, eps, std::move(clustering), cfg,
                               derive_seed(seed, 2));
}

std::uint32_t answer_query(const RankModel& model, std::uint32_t u, std::uint32_t v,
                           std::uint64_t seed) {
    if (u == v || u >= model.n() || v >= model.n()) {
        throw InvalidVertexError("query endpoints must be distinct valid vertices");
    }
    std::int32_t cu = model.cluster_of[u];
    std::int32_t cv = model.cluster_of[v];
    if (cu >= 0 && cu == cv) {
        for (std::uint32_t w : model.orderings[cu]) {
            if (w == u) return u;
            if (w == v) return v;
        }
    }
    Rng rng(derive_seed(seed, (static_cast<std::uint64_t>(u) << 32) | v));
    return rng.bernoulli(0.5) ? u : v;
}

double correct_queries_bound(double n_queries, double votes_intra, double votes_cross,
                             double eps, double p_u) {
    if (votes_intra + votes_cross <= 0.0) {
        throw ConfigError("correct_queries_bound: M + m must be positive");
    }
    double share = votes_intra / (votes_intra + votes_cross);
    double purity = (1.0 - 2.0 * eps) * (1.0 - 2.0 * eps);
    return n_queries * share * purity * (1.0 - 4.0 * p_u);
}

} // namespace hr
