#include "heterorank/gadget.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "heterorank/rng.hpp"

namespace hr {

std::uint32_t min_gadget_size(std::uint32_t k_u, double p) {
    if (k_u < 2) throw ConfigError("min_gadget_size: k_u must be at least 2");
    if (p <= 0.0 || p >= 1.0) throw ConfigError("min_gadget_size: p must lie in (0, 1)");
    double rhs = k_u * (1.0 - std::log(1.0 - p));
    for (std::uint32_t h = 3;; ++h) {
        if (h / (4.0 * std::log(static_cast<double>(h)) + 1.0) >= rhs) return h;
    }
}

double gadget_success_bound(std::uint32_t h, std::uint32_t k_u) {
    double lhs = h / (4.0 * std::log(static_cast<double>(h)) + 1.0);
    return 1.0 - std::exp(1.0 - lhs / k_u);
}

Gadget random_gadget(std::uint32_t h, std::uint64_t seed) {
    if (h < 3) throw ConfigError("random_gadget: order must be at least 3");
    return {random_tournament(h, derive_seed(seed, 0x67616467ULL)), 0,
            GadgetVerification::unverified};
}

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

Gadget quadratic_residue_gadget(std::uint32_t p) {
    if (!is_prime(p)) throw ConfigError("quadratic residue gadget: " + std::to_string(p) + " is not prime");
    if (p % 4 != 3) {
        throw ConfigError("quadratic residue gadget: prime must be 3 mod 4, got " +
                          std::to_string(p));
    }
    std::vector<bool> residue(p, false);
    for (std::uint64_t x = 1; x < p; ++x) residue[(x * x) % p] = true;
    Tournament::Builder b(p);
    for (std::uint32_t i = 0; i < p; ++i) {
        for (std::uint32_t j = i + 1; j < p; ++j) {
            if (residue[(j - i) % p]) b.orient(i, j);
            else b.orient(j, i);
        }
    }
    return {std::move(b).build(), 0, GadgetVerification::unverified};
}

bool induced_transitive(const Tournament& t, const std::vector<std::uint32_t>& subset) {
    std::size_t m = subset.size();
    if (t.order() <= 64) {
        // single-word fast path: degree sort then a backward-edge scan
        std::uint64_t mask = 0;
        for (std::uint32_t v : subset) mask |= std::uint64_t{1} << v;
        std::uint32_t degree[64];
        std::uint32_t idx[64];
        for (std::size_t i = 0; i < m; ++i) {
            degree[i] = static_cast<std::uint32_t>(
                std::popcount(t.out_row(subset[i])[0] & mask));
            idx[i] = static_cast<std::uint32_t>(i);
        }
        std::sort(idx, idx + m,
                  [&](std::uint32_t a, std::uint32_t b) { return degree[a] > degree[b]; });
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = a + 1; b < m; ++b) {
                // backward edge: later vertex beats an earlier one
                if (t.out_row(subset[idx[b]])[0] >> subset[idx[a]] & 1) return false;
            }
        }
        return true;
    }
    std::vector<std::uint32_t> degree(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i != j && t.has_edge(subset[i], subset[j])) ++degree[i];
        }
    }
    std::vector<std::uint32_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = static_cast<std::uint32_t>(i);
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
        return degree[a] > degree[b];
    });
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            if (t.has_edge(subset[idx[b]], subset[idx[a]])) return false;
        }
    }
    return true;
}

namespace {

double binomial(std::uint32_t n, std::uint32_t k) {
    double out = 1.0;
    for (std::uint32_t i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

} // namespace

GadgetVerifyResult verify_gadget(Gadget& gadget, std::uint32_t k_u, bool exhaustive,
                                 std::uint64_t trials, std::uint64_t seed) {
    if (k_u < 1) throw ConfigError("verify_gadget: k_u must be positive");
    std::uint32_t h = gadget.order();
    std::uint32_t m = (h + k_u - 1) / k_u; // ceil(h / k_u)
    GadgetVerifyResult result;

    if (exhaustive) {
        if (binomial(h, m) > 1e7) {
            throw SizeLimitError("verify_gadget: C(" + std::to_string(h) + "," +
                                 std::to_string(m) +
                                 ") subsets exceed the exhaustive guard; use sampled mode");
        }
        // A transitive set of any size >= m contains a transitive m-subset,
        // so checking size exactly m suffices.
        std::vector<std::uint32_t> subset(m);
        for (std::uint32_t i = 0; i < m; ++i) subset[i] = i;
        for (;;) {
            ++result.subsets_checked;
            if (induced_transitive(gadget.pattern, subset)) {
                result.ok = false;
                result.counterexample = subset;
                return result;
            }
            // next combination
            std::int32_t i = static_cast<std::int32_t>(m) - 1;
            while (i >= 0 && subset[i] == h - m + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (std::uint32_t j = i + 1; j < m; ++j) subset[j] = subset[j - 1] + 1;
        }
        result.ok = true;
        gadget.k_u = k_u;
        gadget.verified = GadgetVerification::exhaustive;
        return result;
    }

    Rng rng(derive_seed(seed, 0x76657269ULL));
    VertexSet all = VertexSet::full(h);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        ++result.subsets_checked;
        VertexSet sub = all.random_subset(m, rng);
        std::vector<std::uint32_t> subset = sub.to_vector();
        if (induced_transitive(gadget.pattern, subset)) {
            result.ok = false;
            result.counterexample = subset;
            return result;
        }
    }
    result.ok = true;
    gadget.k_u = k_u;
    gadget.verified = GadgetVerification::sampled;
    return result;
}

} // namespace hr
