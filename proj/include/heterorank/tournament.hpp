#ifndef HETERORANK_TOURNAMENT_HPP
#define HETERORANK_TOURNAMENT_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "heterorank/errors.hpp"
#include "heterorank/vertex_set.hpp"

namespace hr {

// Position in the sequence is the rank; earlier means higher.
using Ordering = std::vector<std::uint32_t>;

using VertexPair = std::pair<std::uint32_t, std::uint32_t>;

enum class EdgeState {
    forward,  // u -> v for direction(u, v)
    backward, // v -> u
    deleted,
};

struct Density {
    double value = 0.0;
    bool has_pairs = false; // false when every pair between the sets is deleted
};

class TournamentBuilder;

// n-vertex tournament with optional pair deletion. Exactly one direction is
// stored per present unordered pair; a deleted pair reports no direction and
// counts as non-adjacent in both directions for every operation.
//
// Immutable after construction except for pair deletion, which either
// returns a fresh copy (with_deleted_pairs) or rewrites this instance
// in place (erase_pairs) when the caller owns it. Reads are safe to share.
class Tournament {
public:
    using Builder = TournamentBuilder;

    std::uint32_t order() const { return n_; }

    EdgeState direction(std::uint32_t u, std::uint32_t v) const {
        check_pair(u, v);
        if (out_bit(u, v)) return EdgeState::forward;
        if (out_bit(v, u)) return EdgeState::backward;
        return EdgeState::deleted;
    }

    bool present(std::uint32_t u, std::uint32_t v) const {
        check_pair(u, v);
        return out_bit(u, v) || out_bit(v, u);
    }

    // True iff the present edge u -> v exists.
    bool has_edge(std::uint32_t u, std::uint32_t v) const {
        check_pair(u, v);
        return out_bit(u, v);
    }

    std::uint64_t present_pair_count() const;

    // All present directed edges, ordered by (min endpoint, max endpoint).
    std::vector<VertexPair> edges() const;

    // Copy with the listed pairs deleted. Deleting an already deleted pair is
    // an idempotent no-op; the count of such pairs is reported through
    // already_deleted if non-null.
    Tournament with_deleted_pairs(std::span<const VertexPair> pairs,
                                  std::uint64_t* already_deleted = nullptr) const;

    // In-place variant for owners of the instance.
    void erase_pairs(std::span<const VertexPair> pairs,
                     std::uint64_t* already_deleted = nullptr);

    // Count of present edges (a, b) where b is earlier than a in the
    // ordering. The ordering must not repeat vertices.
    std::uint64_t backward_edges(const Ordering& o) const;

    // Same, restricted to edges with one endpoint in z and the other in p.
    // Every vertex of both sets must appear in the ordering.
    std::uint64_t backward_edges_cross(const Ordering& o, const VertexSet& z,
                                       const VertexSet& p) const;

    // Present edges from x to y over present pairs between x and y.
    // The sets must be disjoint and non-empty.
    Density directed_density(const VertexSet& x, const VertexSet& y) const;

    VertexSet out_neighbors_in(std::uint32_t v, const VertexSet& w) const;
    VertexSet in_neighbors_in(std::uint32_t v, const VertexSet& w) const;

    std::uint32_t out_degree_in(std::uint32_t v, const VertexSet& w) const {
        check_vertex(v);
        return intersection_count(out_row(v), w.words());
    }

    std::uint32_t in_degree_in(std::uint32_t v, const VertexSet& w) const {
        check_vertex(v);
        return intersection_count(in_row(v), w.words());
    }

    // Size of the largest vertex subset inducing a transitive (acyclic)
    // subtournament. Exhaustive; refuses orders above 24.
    std::uint32_t max_transitive_subset() const;

    std::span<const std::uint64_t> out_row(std::uint32_t v) const {
        return {out_.data() + static_cast<std::size_t>(v) * wpr_, wpr_};
    }

    std::span<const std::uint64_t> in_row(std::uint32_t v) const {
        return {in_.data() + static_cast<std::size_t>(v) * wpr_, wpr_};
    }

private:
    explicit Tournament(std::uint32_t n)
        : n_(n), wpr_((n + 63) / 64),
          out_(static_cast<std::size_t>(n) * ((n + 63) / 64), 0),
          in_(static_cast<std::size_t>(n) * ((n + 63) / 64), 0) {}

    bool out_bit(std::uint32_t u, std::uint32_t v) const {
        return (out_[static_cast<std::size_t>(u) * wpr_ + (v >> 6)] >> (v & 63)) & 1;
    }

    void set_edge(std::uint32_t from, std::uint32_t to) {
        out_[static_cast<std::size_t>(from) * wpr_ + (to >> 6)] |= std::uint64_t{1} << (to & 63);
        in_[static_cast<std::size_t>(to) * wpr_ + (from >> 6)] |= std::uint64_t{1} << (from & 63);
    }

    void clear_pair(std::uint32_t u, std::uint32_t v) {
        auto clear = [&](std::vector<std::uint64_t>& m, std::uint32_t a, std::uint32_t b) {
            m[static_cast<std::size_t>(a) * wpr_ + (b >> 6)] &= ~(std::uint64_t{1} << (b & 63));
        };
        clear(out_, u, v);
        clear(out_, v, u);
        clear(in_, u, v);
        clear(in_, v, u);
    }

    void check_vertex(std::uint32_t v) const {
        if (v >= n_) throw InvalidVertexError("vertex " + std::to_string(v) + " out of range");
    }

    void check_pair(std::uint32_t u, std::uint32_t v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InvalidVertexError("self pair {" + std::to_string(u) + "} is not an edge");
    }

    std::uint32_t n_ = 0;
    std::size_t wpr_ = 0; // words per adjacency row
    std::vector<std::uint64_t> out_; // bit v of row u: present edge u -> v
    std::vector<std::uint64_t> in_;  // bit v of row u: present edge v -> u

    friend class TournamentBuilder;
};

// Builds a tournament by orienting every pair exactly once.
class TournamentBuilder {
public:
    explicit TournamentBuilder(std::uint32_t n) : t_(n) {}

    // Insert the directed edge from -> to. Orienting a pair twice throws.
    void orient(std::uint32_t from, std::uint32_t to);

    // Verifies every pair got a direction, then yields the tournament.
    Tournament build() &&;

    // Yields a tournament where unoriented pairs are deleted.
    Tournament build_with_deletions() && { return std::move(t_); }

private:
    Tournament t_;
};

// Transitive tournament: edge i -> j for every i < j.
Tournament transitive_tournament(std::uint32_t n);

// Every pair oriented by a fair coin.
Tournament random_tournament(std::uint32_t n, std::uint64_t seed);

} // namespace hr

#endif
