#include "heterorank/tournament.hpp"

#include <algorithm>
#include <bit>

#include "heterorank/rng.hpp"

namespace hr {

void TournamentBuilder::orient(std::uint32_t from, std::uint32_t to) {
    t_.check_pair(from, to);
    if (t_.out_bit(from, to) || t_.out_bit(to, from)) {
        throw ContractError("pair {" + std::to_string(from) + "," + std::to_string(to) +
                            "} oriented twice");
    }
    t_.set_edge(from, to);
}

Tournament TournamentBuilder::build() && {
    std::uint64_t n = t_.n_;
    if (t_.present_pair_count() != n * (n - 1) / 2) {
        throw ContractError("tournament build incomplete: not every pair oriented");
    }
    return std::move(t_);
}

std::uint64_t Tournament::present_pair_count() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : out_) c += std::popcount(w);
    return c;
}

std::vector<VertexPair> Tournament::edges() const {
    std::vector<VertexPair> out;
    out.reserve(present_pair_count());
    for (std::uint32_t u = 0; u < n_; ++u) {
        for (std::uint32_t v = u + 1; v < n_; ++v) {
            if (out_bit(u, v)) out.emplace_back(u, v);
            else if (out_bit(v, u)) out.emplace_back(v, u);
        }
    }
    return out;
}

Tournament Tournament::with_deleted_pairs(std::span<const VertexPair> pairs,
                                          std::uint64_t* already_deleted) const {
    Tournament copy = *this;
    copy.erase_pairs(pairs, already_deleted);
    return copy;
}

void Tournament::erase_pairs(std::span<const VertexPair> pairs,
                             std::uint64_t* already_deleted) {
    std::uint64_t noop = 0;
    for (auto [u, v] : pairs) {
        check_pair(u, v);
        if (!out_bit(u, v) && !out_bit(v, u)) {
            ++noop; // idempotent
            continue;
        }
        clear_pair(u, v);
    }
    if (already_deleted) *already_deleted = noop;
}

std::uint64_t Tournament::backward_edges(const Ordering& o) const {
    VertexSet seen(n_);
    std::uint64_t count = 0;
    for (std::uint32_t v : o) {
        check_vertex(v);
        if (seen.contains(v)) throw ContractError("ordering repeats vertex " + std::to_string(v));
        count += intersection_count(out_row(v), seen.words());
        seen.insert(v);
    }
    return count;
}

std::uint64_t Tournament::backward_edges_cross(const Ordering& o, const VertexSet& z,
                                               const VertexSet& p) const {
    VertexSet covered(n_);
    for (std::uint32_t v : o) covered.insert(v);
    VertexSet want = z | p;
    if (!want.is_subset_of(covered)) {
        throw ContractError("cross sets contain a vertex missing from the ordering");
    }
    VertexSet seen_z(n_), seen_p(n_);
    std::uint64_t count = 0;
    for (std::uint32_t v : o) {
        if (z.contains(v)) count += intersection_count(out_row(v), seen_p.words());
        if (p.contains(v)) count += intersection_count(out_row(v), seen_z.words());
        if (z.contains(v)) seen_z.insert(v);
        if (p.contains(v)) seen_p.insert(v);
    }
    return count;
}

Density Tournament::directed_density(const VertexSet& x, const VertexSet& y) const {
    if (x.empty() || y.empty()) throw ContractError("directed_density: empty set");
    if (x.intersects(y)) throw ContractError("directed_density: overlapping sets");
    std::uint64_t forward = 0;
    std::uint64_t present_pairs = 0;
    x.for_each([&](std::uint32_t v) {
        forward += intersection_count(out_row(v), y.words());
        present_pairs += intersection_count(out_row(v), y.words());
        present_pairs += intersection_count(in_row(v), y.words());
    });
    if (present_pairs == 0) return {0.0, false};
    return {static_cast<double>(forward) / static_cast<double>(present_pairs), true};
}

VertexSet Tournament::out_neighbors_in(std::uint32_t v, const VertexSet& w) const {
    check_vertex(v);
    VertexSet out = w;
    auto ww = out.words();
    auto row = out_row(v);
    for (std::size_t i = 0; i < ww.size(); ++i) ww[i] &= row[i];
    return out;
}

VertexSet Tournament::in_neighbors_in(std::uint32_t v, const VertexSet& w) const {
    check_vertex(v);
    VertexSet out = w;
    auto ww = out.words();
    auto row = in_row(v);
    for (std::size_t i = 0; i < ww.size(); ++i) ww[i] &= row[i];
    return out;
}

std::uint32_t Tournament::max_transitive_subset() const {
    if (n_ > 24) {
        throw SizeLimitError("max_transitive_subset is exhaustive; n = " +
                             std::to_string(n_) + " exceeds the guard of 24");
    }
    if (n_ == 0) return 0;
    std::vector<std::uint32_t> outmask(n_, 0);
    for (std::uint32_t v = 0; v < n_; ++v) {
        outmask[v] = static_cast<std::uint32_t>(out_row(v)[0]);
    }
    // chain(S) = longest sequence v1 -> v2 -> ... with all later picks drawn
    // from the running intersection of out-neighborhoods; such a sequence
    // induces a transitive subtournament and every transitive subtournament
    // arises this way from its own internal order.
    std::vector<std::int8_t> memo(std::size_t{1} << n_, -1);
    auto chain = [&](auto&& self, std::uint32_t cand) -> std::uint32_t {
        if (cand == 0) return 0;
        if (memo[cand] >= 0) return static_cast<std::uint32_t>(memo[cand]);
        std::uint32_t best = 0;
        std::uint32_t rest = cand;
        while (rest) {
            std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(rest));
            rest &= rest - 1;
            std::uint32_t sub = self(self, cand & outmask[v]);
            best = std::max(best, 1 + sub);
        }
        memo[cand] = static_cast<std::int8_t>(best);
        return best;
    };
    std::uint32_t full = (1u << n_) - 1;
    return chain(chain, full);
}

Tournament transitive_tournament(std::uint32_t n) {
    Tournament::Builder b(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) b.orient(i, j);
    return std::move(b).build();
}

Tournament random_tournament(std::uint32_t n, std::uint64_t seed) {
    Rng rng(seed);
    Tournament::Builder b(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            if (rng.bernoulli(0.5)) b.orient(i, j);
            else b.orient(j, i);
        }
    }
    return std::move(b).build();
}

} // namespace hr
