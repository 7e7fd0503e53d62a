#ifndef HETERORANK_MODEL_HPP
#define HETERORANK_MODEL_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "heterorank/tournament.hpp"

namespace hr {

// Published bounds of the planted model: p_u upper-bounds every intra flip
// probability, p_m lower-bounds every cross direction probability, k_u
// upper-bounds the domain count.
struct Bounds {
    double p_u = 0.0;
    double p_m = 0.0;
    std::uint32_t k_u = 0;

    double het() const { return p_m / p_u; }
};

struct GroundTruth {
    std::vector<std::uint32_t> domain_of;      // per vertex
    std::vector<std::uint32_t> pos_in_domain;  // canonical position, 0 = highest
    std::vector<std::vector<std::uint32_t>> domains; // canonical order per domain
    std::vector<std::uint32_t> global_order;   // domain canonical orders concatenated

    std::uint32_t n() const { return static_cast<std::uint32_t>(domain_of.size()); }
    std::uint32_t k() const { return static_cast<std::uint32_t>(domains.size()); }
    bool same_domain(std::uint32_t u, std::uint32_t v) const {
        return domain_of[u] == domain_of[v];
    }
    // True iff u ranks above v in the canonical order of their shared domain.
    bool above_intra(std::uint32_t u, std::uint32_t v) const {
        return pos_in_domain[u] < pos_in_domain[v];
    }
};

struct PlantedSpec {
    std::vector<std::uint32_t> domain_sizes;          // each >= 2
    std::vector<Ordering> thetas;                     // empty => identity per block
    std::vector<double> p_intra;                      // per domain
    std::vector<std::vector<double>> p_cross;         // k x k, p_cross[j][i] = 1 - p_cross[i][j]
    Bounds bounds;

    std::uint32_t k() const { return static_cast<std::uint32_t>(domain_sizes.size()); }
    std::uint32_t n() const;

    // Throws ConfigError when any invariant fails (p_i <= p_u, p_m <= p_ij
    // <= 1 - p_m, k <= k_u, p_m > p_u, sizes >= 2, theta shapes).
    void validate() const;

    // Equal-size domains, one intra flip probability, one cross probability
    // for every ordered pair (i < j).
    static PlantedSpec uniform(std::uint32_t k, std::uint32_t n, double p_intra,
                               double p_cross, Bounds bounds);
};

std::pair<Tournament, GroundTruth> generate_planted(const PlantedSpec& spec,
                                                    std::uint64_t seed);

// Majority-voting pipeline. Intra pairs receive votes_intra votes, cross
// pairs votes_cross (expectations when poisson is set); each vote is wrong
// independently with probability p_mis; the edge follows the majority, ties
// and zero-vote pairs by a fair coin.
struct VotingConfig {
    double p_mis = 0.45;
    std::uint32_t votes_intra = 100; // M
    std::uint32_t votes_cross = 2;   // m
    bool poisson = false;

    double ratio() const {
        return votes_intra ? static_cast<double>(votes_cross) / votes_intra : 0.0;
    }
    void validate() const;
};

struct VoteTally {
    std::uint32_t total = 0;
    std::uint32_t for_truth = 0; // votes agreeing with the global groundtruth
};

struct VotingResult {
    Tournament tournament;
    GroundTruth truth;
    std::vector<VoteTally> tallies; // triangular pair index; empty unless requested
};

std::size_t pair_index(std::uint32_t u, std::uint32_t v);

VotingResult generate_voting(const VotingConfig& config,
                             const std::vector<std::uint32_t>& domain_sizes,
                             std::uint64_t seed, bool want_tallies = false);

// Splits every pair's votes into two halves and builds one tournament per
// half; the halves are independent, which is what the outlier filter needs.
struct VotingSplitResult {
    Tournament first;
    Tournament second;
    GroundTruth truth;
};

VotingSplitResult generate_voting_split(const VotingConfig& config,
                                        const std::vector<std::uint32_t>& domain_sizes,
                                        std::uint64_t seed);

// exp(-(delta^2 / (2 + delta)) * K * p_succ) with delta = 1/2 - p_mis.
// Upper bound on the probability that the K-vote majority is wrong.
double chernoff_mistake_bound(std::uint32_t k_votes, double p_mis);

// Exact probability that a majority of k votes is wrong (ties count half).
double majority_mistake_exact(std::uint32_t k_votes, double p_mis);

// p_u = exact mistake probability at votes_intra votes; p_m = the minimum
// direction probability over cross vote counts <= votes_cross, which the
// exact binomial attains at votes_cross itself.
Bounds derive_bounds(const VotingConfig& config, std::uint32_t k_u);

// Lemma-style high-probability bound on the number of bad (flipped intra)
// edges: (1 + delta) * sum_i n_i^2 p_i / 2 * (1 - 1/n_i) with
// delta = max(2, 4 ln g(n) / sum_i n_i^2 p_i (1 - 1/n_i)).
double bad_edge_bound(const PlantedSpec& spec, double g_of_n);

// Advisory check of the theory preconditions. Algorithms still run when
// some fail; the report is for diagnostics.
struct PreconditionReport {
    double het = 0.0;
    bool het_ok = false;           // het >= 12
    double eps_lower = 0.0;        // 2h sqrt(3 k_u h / het)
    bool eps_lower_ok = false;
    double eps_upper = 0.0;        // min(1/k_u, p_m/4)
    bool eps_upper_ok = false;
    bool domain_sizes_ok = false;  // every domain >= 2
    double thm_query_eps_max = 0.0; // p_m (p_m/128 - 4/het), reported only
    bool thm_query_ok = false;

    bool clustering_ok() const {
        return het_ok && eps_lower_ok && eps_upper_ok && domain_sizes_ok;
    }
};

PreconditionReport validate_preconditions(std::uint32_t n,
                                          const std::vector<std::uint32_t>& domain_sizes,
                                          const Bounds& bounds, std::uint32_t h,
                                          double eps);

struct Query {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
};

// N unordered pairs drawn from the training distribution: intra pairs carry
// weight m_weight_intra, cross pairs weight m_weight_cross, normalized over
// the pair counts.
std::vector<Query> sample_queries(const GroundTruth& truth, double weight_intra,
                                  double weight_cross, std::size_t n_queries,
                                  std::uint64_t seed);

} // namespace hr

#endif
