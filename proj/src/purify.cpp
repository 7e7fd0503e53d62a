#include "heterorank/purify.hpp"

#include <cmath>

#include "heterorank/rng.hpp"

namespace hr {

double triangle_estimate(const Tournament& check, const VertexSet& cluster,
                         std::uint32_t v, std::uint32_t s, std::uint64_t seed) {
    if (s == 0) throw ConfigError("triangle_estimate: sample count must be positive");
    if (!cluster.contains(v)) throw ContractError("triangle_estimate: v outside cluster");
    VertexSet outs = check.out_neighbors_in(v, cluster);
    VertexSet ins = check.in_neighbors_in(v, cluster);
    std::vector<std::uint32_t> up = outs.to_vector();
    std::vector<std::uint32_t> down = ins.to_vector();
    if (up.empty() || down.empty()) return 0.0;
    Rng rng(derive_seed(seed, 0x74726961ULL));
    std::uint32_t hits = 0;
    for (std::uint32_t i = 0; i < s; ++i) {
        std::uint32_t u = up[rng.below(static_cast<std::uint32_t>(up.size()))];
        std::uint32_t w = down[rng.below(static_cast<std::uint32_t>(down.size()))];
        if (u != w && check.has_edge(u, w)) ++hits; // closes v -> u -> w -> v
    }
    return static_cast<double>(hits) / s * static_cast<double>(up.size()) *
           static_cast<double>(down.size());
}

double triangle_count_exact(const Tournament& check, const VertexSet& cluster,
                            std::uint32_t v) {
    if (!cluster.contains(v)) throw ContractError("triangle_count_exact: v outside cluster");
    VertexSet outs = check.out_neighbors_in(v, cluster);
    VertexSet ins = check.in_neighbors_in(v, cluster);
    if (outs.empty() || ins.empty()) return 0.0;
    std::uint64_t count = 0;
    outs.for_each([&](std::uint32_t u) {
        count += intersection_count(check.out_row(u), ins.words());
    });
    return static_cast<double>(count);
}

VertexSet purify(const Partitioning& partitioning, const Tournament& check,
                 const Bounds& bounds, double eps, const PurifyConfig& cfg,
                 std::uint64_t seed) {
    if (cfg.sample_coefficient <= 0.0) {
        throw ConfigError("purify: sample coefficient must be positive");
    }
    const std::uint32_t n = check.order();
    std::uint32_t s = static_cast<std::uint32_t>(
        std::ceil(cfg.sample_coefficient * std::log(std::max<std::uint32_t>(n, 2))));
    Rng rng(derive_seed(seed, 0x70757269ULL));
    VertexSet keep(n);
    for (const VertexSet& cluster : partitioning.clusters) {
        double size = cluster.count();
        double threshold = (1.0 - eps) * (1.0 - eps) / 32.0 * size * size *
                           bounds.p_m * bounds.p_m;
        cluster.for_each([&](std::uint32_t v) {
            double estimate = cfg.exact
                                  ? triangle_count_exact(check, cluster, v)
                                  : triangle_estimate(check, cluster, v, s, rng.next());
            if (estimate < threshold) keep.insert(v);
        });
    }
    return keep;
}

} // namespace hr
