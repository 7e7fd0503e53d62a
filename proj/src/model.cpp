#include "heterorank/model.hpp"

#include <algorithm>
#include <cmath>

#include "heterorank/rng.hpp"

namespace hr {

namespace {

GroundTruth make_truth(const std::vector<std::uint32_t>& domain_sizes,
                       const std::vector<Ordering>& thetas) {
    GroundTruth g;
    std::uint32_t n = 0;
    for (std::uint32_t s : domain_sizes) n += s;
    g.domain_of.resize(n);
    g.pos_in_domain.resize(n);
    g.domains.resize(domain_sizes.size());
    g.global_order.reserve(n);
    std::uint32_t base = 0;
    for (std::size_t d = 0; d < domain_sizes.size(); ++d) {
        std::uint32_t size = domain_sizes[d];
        Ordering order;
        if (thetas.empty()) {
            order.resize(size);
            for (std::uint32_t i = 0; i < size; ++i) order[i] = base + i;
        } else {
            order = thetas[d];
        }
        g.domains[d] = order;
        for (std::uint32_t pos = 0; pos < size; ++pos) {
            std::uint32_t v = order[pos];
            g.domain_of[v] = static_cast<std::uint32_t>(d);
            g.pos_in_domain[v] = pos;
            g.global_order.push_back(v);
        }
        base += size;
    }
    return g;
}

} // namespace

std::uint32_t PlantedSpec::n() const {
    std::uint32_t total = 0;
    for (std::uint32_t s : domain_sizes) total += s;
    return total;
}

void PlantedSpec::validate() const {
    std::uint32_t kk = k();
    if (kk == 0) throw ConfigError("planted spec: no domains");
    if (kk > bounds.k_u) throw ConfigError("planted spec: k exceeds k_u");
    if (!(bounds.p_m > bounds.p_u)) throw ConfigError("planted spec: requires p_m > p_u");
    for (std::uint32_t s : domain_sizes)
        if (s < 2) throw ConfigError("planted spec: domain size below 2");
    if (p_intra.size() != kk) throw ConfigError("planted spec: p_intra size mismatch");
    for (double p : p_intra) {
        if (p < 0.0 || p > bounds.p_u) throw ConfigError("planted spec: p_i outside [0, p_u]");
    }
    if (p_cross.size() != kk) throw ConfigError("planted spec: p_cross shape mismatch");
    for (std::size_t i = 0; i < kk; ++i) {
        if (p_cross[i].size() != kk) throw ConfigError("planted spec: p_cross shape mismatch");
        for (std::size_t j = 0; j < kk; ++j) {
            if (i == j) continue;
            double pij = p_cross[i][j];
            if (pij < bounds.p_m - 1e-12 || pij > 1.0 - bounds.p_m + 1e-12) {
                throw ConfigError("planted spec: p_ij outside [p_m, 1 - p_m]");
            }
            if (std::abs(p_cross[j][i] - (1.0 - pij)) > 1e-9) {
                throw ConfigError("planted spec: p_ji != 1 - p_ij");
            }
        }
    }
    if (!thetas.empty()) {
        if (thetas.size() != kk) throw ConfigError("planted spec: theta count mismatch");
        VertexSet seen(n());
        for (std::size_t d = 0; d < kk; ++d) {
            if (thetas[d].size() != domain_sizes[d]) {
                throw ConfigError("planted spec: theta size mismatch");
            }
            for (std::uint32_t v : thetas[d]) {
                if (seen.contains(v)) throw ConfigError("planted spec: theta repeats vertex");
                seen.insert(v);
            }
        }
    }
}

PlantedSpec PlantedSpec::uniform(std::uint32_t k, std::uint32_t n, double p_intra,
                                 double p_cross, Bounds bounds) {
    PlantedSpec spec;
    spec.bounds = bounds;
    spec.domain_sizes.assign(k, n / k);
    for (std::uint32_t i = 0; i < n % k; ++i) spec.domain_sizes[i] += 1;
    spec.p_intra.assign(k, p_intra);
    spec.p_cross.assign(k, std::vector<double>(k, 0.0));
    for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t j = 0; j < k; ++j) {
            if (i == j) continue;
            spec.p_cross[i][j] = i < j ? p_cross : 1.0 - p_cross;
        }
    }
    return spec;
}

std::pair<Tournament, GroundTruth> generate_planted(const PlantedSpec& spec,
                                                    std::uint64_t seed) {
    spec.validate();
    GroundTruth truth = make_truth(spec.domain_sizes, spec.thetas);
    std::uint32_t n = truth.n();
    Rng rng(derive_seed(seed, 0x706c616e74ULL));
    Tournament::Builder b(n);
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = u + 1; v < n; ++v) {
            std::uint32_t du = truth.domain_of[u];
            std::uint32_t dv = truth.domain_of[v];
            if (du == dv) {
                // higher canonical rank points at lower; flipped with p_i
                std::uint32_t hi = truth.above_intra(u, v) ? u : v;
                std::uint32_t lo = hi == u ? v : u;
                if (rng.bernoulli(spec.p_intra[du])) b.orient(lo, hi);
                else b.orient(hi, lo);
            } else {
                if (rng.bernoulli(spec.p_cross[du][dv])) b.orient(u, v);
                else b.orient(v, u);
            }
        }
    }
    return {std::move(b).build(), std::move(truth)};
}

void VotingConfig::validate() const {
    if (p_mis < 0.0 || p_mis >= 0.5) throw ConfigError("voting: p_mis must lie in [0, 1/2)");
    if (votes_intra == 0) throw ConfigError("voting: votes_intra must be positive");
    if (votes_cross >= votes_intra) throw ConfigError("voting: requires M > m");
}

std::size_t pair_index(std::uint32_t u, std::uint32_t v) {
    if (u > v) std::swap(u, v);
    return static_cast<std::size_t>(v) * (v - 1) / 2 + u;
}

namespace {

// Draw one pair's majority outcome. Returns true when the edge agrees with
// the groundtruth direction; fills the tally when asked.
bool majority_agrees(std::uint32_t votes, double p_mis, Rng& rng, VoteTally* tally) {
    std::uint32_t wrong = 0;
    for (std::uint32_t i = 0; i < votes; ++i) {
        if (rng.bernoulli(p_mis)) ++wrong;
    }
    if (tally) {
        tally->total = votes;
        tally->for_truth = votes - wrong;
    }
    if (2 * wrong == votes) return rng.bernoulli(0.5); // tie or zero votes
    return 2 * wrong < votes;
}

VotingResult generate_voting_impl(const VotingConfig& config,
                                  const std::vector<std::uint32_t>& domain_sizes,
                                  std::uint64_t seed, bool want_tallies,
                                  Tournament* second_half) {
    config.validate();
    GroundTruth truth = make_truth(domain_sizes, {});
    std::uint32_t n = truth.n();
    std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (want_tallies && pairs > 50'000'000ULL) {
        throw SizeLimitError("vote tallies for this order would not fit in memory");
    }
    Rng rng(derive_seed(seed, 0x766f7465ULL));
    Tournament::Builder b(n);
    Tournament::Builder b2 = second_half ? Tournament::Builder(n) : Tournament::Builder(0);
    VotingResult result{Tournament::Builder(0).build_with_deletions(), {}, {}};
    if (want_tallies) result.tallies.resize(pairs);
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = u + 1; v < n; ++v) {
            bool intra = truth.same_domain(u, v);
            std::uint32_t expected = intra ? config.votes_intra : config.votes_cross;
            // groundtruth winner of this pair
            bool u_above = intra ? truth.above_intra(u, v)
                                 : truth.domain_of[u] < truth.domain_of[v];
            std::uint32_t hi = u_above ? u : v;
            std::uint32_t lo = u_above ? v : u;
            if (second_half) {
                std::uint32_t total = config.poisson
                                          ? rng.poisson(static_cast<double>(expected))
                                          : expected;
                std::uint32_t half1 = total / 2 + (total % 2);
                bool a1 = majority_agrees(half1, config.p_mis, rng, nullptr);
                bool a2 = majority_agrees(total - half1, config.p_mis, rng, nullptr);
                if (a1) b.orient(hi, lo); else b.orient(lo, hi);
                if (a2) b2.orient(hi, lo); else b2.orient(lo, hi);
            } else {
                std::uint32_t total = config.poisson
                                          ? rng.poisson(static_cast<double>(expected))
                                          : expected;
                VoteTally* tally =
                    want_tallies ? &result.tallies[pair_index(u, v)] : nullptr;
                bool agrees = majority_agrees(total, config.p_mis, rng, tally);
                if (agrees) b.orient(hi, lo);
                else b.orient(lo, hi);
            }
        }
    }
    result.tournament = std::move(b).build();
    result.truth = std::move(truth);
    if (second_half) *second_half = std::move(b2).build();
    return result;
}

} // namespace

VotingResult generate_voting(const VotingConfig& config,
                             const std::vector<std::uint32_t>& domain_sizes,
                             std::uint64_t seed, bool want_tallies) {
    return generate_voting_impl(config, domain_sizes, seed, want_tallies, nullptr);
}

VotingSplitResult generate_voting_split(const VotingConfig& config,
                                        const std::vector<std::uint32_t>& domain_sizes,
                                        std::uint64_t seed) {
    Tournament second = Tournament::Builder(0).build_with_deletions();
    VotingResult r = generate_voting_impl(config, domain_sizes, seed, false, &second);
    return {std::move(r.tournament), std::move(second), std::move(r.truth)};
}

double chernoff_mistake_bound(std::uint32_t k_votes, double p_mis) {
    if (p_mis < 0.0 || p_mis >= 0.5) throw ConfigError("chernoff bound: p_mis must lie in [0, 1/2)");
    if (k_votes == 0) throw ConfigError("chernoff bound: needs at least one vote");
    double delta = 0.5 - p_mis;
    double p_succ = 1.0 - p_mis;
    return std::exp(-(delta * delta / (2.0 + delta)) * k_votes * p_succ);
}

double majority_mistake_exact(std::uint32_t k_votes, double p_mis) {
    if (k_votes == 0) return 0.5; // no data, fair coin
    // P(Bin(k, p_mis) > k/2) + 1/2 P(= k/2); recurrence keeps it exact enough
    // for the vote counts in play.
    std::vector<double> pmf(k_votes + 1, 0.0);
    pmf[0] = 1.0;
    for (std::uint32_t i = 0; i < k_votes; ++i) {
        for (std::uint32_t j = i + 1; j > 0; --j) {
            pmf[j] = pmf[j] * (1.0 - p_mis) + pmf[j - 1] * p_mis;
        }
        pmf[0] *= 1.0 - p_mis;
    }
    double out = 0.0;
    for (std::uint32_t wrong = 0; wrong <= k_votes; ++wrong) {
        if (2 * wrong > k_votes) out += pmf[wrong];
        else if (2 * wrong == k_votes) out += 0.5 * pmf[wrong];
    }
    return out;
}

Bounds derive_bounds(const VotingConfig& config, std::uint32_t k_u) {
    config.validate();
    Bounds b;
    b.k_u = k_u;
    b.p_u = majority_mistake_exact(config.votes_intra, config.p_mis);
    // The mistake probability shrinks with the vote count, so the minimum
    // direction probability over counts <= m sits at m itself.
    b.p_m = majority_mistake_exact(config.votes_cross, config.p_mis);
    return b;
}

double bad_edge_bound(const PlantedSpec& spec, double g_of_n) {
    spec.validate();
    if (g_of_n <= 0.0) throw ConfigError("bad_edge_bound: g(n) must be positive");
    double sum = 0.0; // sum_i n_i^2 p_i (1 - 1/n_i)
    double half_sum = 0.0;
    for (std::size_t i = 0; i < spec.domain_sizes.size(); ++i) {
        double ni = spec.domain_sizes[i];
        double term = ni * ni * spec.p_intra[i] * (1.0 - 1.0 / ni);
        sum += term;
        half_sum += term / 2.0;
    }
    if (sum == 0.0) return 0.0; // no bad edges possible
    double delta = std::max(2.0, 4.0 * std::log(g_of_n) / sum);
    return (1.0 + delta) * half_sum;
}

PreconditionReport validate_preconditions(std::uint32_t n,
                                          const std::vector<std::uint32_t>& domain_sizes,
                                          const Bounds& bounds, std::uint32_t h,
                                          double eps) {
    (void)n;
    PreconditionReport r;
    r.het = bounds.het();
    r.het_ok = r.het >= 12.0;
    r.eps_lower = 2.0 * h * std::sqrt(3.0 * bounds.k_u * h / r.het);
    r.eps_lower_ok = eps >= r.eps_lower;
    r.eps_upper = std::min(1.0 / bounds.k_u, bounds.p_m / 4.0);
    r.eps_upper_ok = eps <= r.eps_upper;
    r.domain_sizes_ok = !domain_sizes.empty();
    for (std::uint32_t s : domain_sizes) {
        if (s < 2) r.domain_sizes_ok = false;
    }
    r.thm_query_eps_max = bounds.p_m * (bounds.p_m / 128.0 - 4.0 / r.het);
    r.thm_query_ok = eps <= r.thm_query_eps_max;
    return r;
}

std::vector<Query> sample_queries(const GroundTruth& truth, double weight_intra,
                                  double weight_cross, std::size_t n_queries,
                                  std::uint64_t seed) {
    if (n_queries == 0) return {};
    std::uint32_t n = truth.n();
    double intra_pairs = 0.0;
    for (const auto& d : truth.domains) {
        double s = static_cast<double>(d.size());
        intra_pairs += s * (s - 1.0) / 2.0;
    }
    double all_pairs = static_cast<double>(n) * (n - 1.0) / 2.0;
    double cross_pairs = all_pairs - intra_pairs;
    double w_intra = weight_intra * intra_pairs;
    double w_cross = weight_cross * cross_pairs;
    if (w_intra + w_cross <= 0.0) throw ConfigError("sample_queries: zero total weight");
    double p_intra_class = w_intra / (w_intra + w_cross);

    Rng rng(derive_seed(seed, 0x71756572ULL));
    std::vector<Query> queries;
    queries.reserve(n_queries);
    while (queries.size() < n_queries) {
        if (rng.bernoulli(p_intra_class)) {
            // uniform intra pair: pick a domain weighted by its pair count
            double target = rng.unit() * intra_pairs;
            std::size_t d = 0;
            double acc = 0.0;
            for (; d + 1 < truth.domains.size(); ++d) {
                double s = static_cast<double>(truth.domains[d].size());
                acc += s * (s - 1.0) / 2.0;
                if (target < acc) break;
            }
            const auto& dom = truth.domains[d];
            std::uint32_t a = rng.below(static_cast<std::uint32_t>(dom.size()));
            std::uint32_t bi = rng.below(static_cast<std::uint32_t>(dom.size() - 1));
            if (bi >= a) ++bi;
            queries.push_back({dom[a], dom[bi]});
        } else {
            for (;;) {
                std::uint32_t a = rng.below(n);
                std::uint32_t b = rng.below(n);
                if (a != b && !truth.same_domain(a, b)) {
                    queries.push_back({a, b});
                    break;
                }
            }
        }
    }
    return queries;
}

} // namespace hr
