#ifndef HETERORANK_PURIFY_HPP
#define HETERORANK_PURIFY_HPP

#include <cstdint>

#include "heterorank/clustering.hpp"
#include "heterorank/model.hpp"
#include "heterorank/tournament.hpp"

namespace hr {

struct PurifyConfig {
    // s = ceil(a * ln n) samples per vertex.
    double sample_coefficient = 30.0;
    // Exact enumeration of N+ x N- instead of sampling (deterministic).
    bool exact = false;
    // Where the fresh tournament comes from; the harness resolves this.
    enum class Source { regenerate, vote_split } source = Source::regenerate;
};

// Estimated number of directed triangles v -> u -> w -> v inside the cluster
// of the check tournament, from s uniform samples of N+_v x N-_v. Returns 0
// when either neighborhood is empty.
double triangle_estimate(const Tournament& check, const VertexSet& cluster,
                         std::uint32_t v, std::uint32_t s, std::uint64_t seed);

// Exact count of those triangles.
double triangle_count_exact(const Tournament& check, const VertexSet& cluster,
                            std::uint32_t v);

// Keeps the vertices whose triangle estimate stays below
// (1 - eps)^2 / 32 * |P_i|^2 * p_m^2; the rest are outliers. The check
// tournament must be drawn independently of the one that produced the
// partitioning.
VertexSet purify(const Partitioning& partitioning, const Tournament& check,
                 const Bounds& bounds, double eps, const PurifyConfig& cfg,
                 std::uint64_t seed);

} // namespace hr

#endif
