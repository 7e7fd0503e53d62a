#ifndef HETERORANK_CONFIG_HPP
#define HETERORANK_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "heterorank/clustering.hpp"
#include "heterorank/gadget.hpp"
#include "heterorank/model.hpp"
#include "heterorank/purify.hpp"
#include "heterorank/ranking.hpp"

namespace hr {

struct GadgetSpec {
    enum class Kind { qr, random, file } kind = Kind::qr;
    std::uint32_t param = 7;   // prime for qr, order for random
    std::string path;          // file kind
};

// Experiment description. Text form is "key = value" lines, '#' comments.
// Keys: mode, n, k, domain_sizes, p_intra, p_cross, ratio, p_succ, votes,
// poisson, eps, k_u, gadget, seeds, quicksort_runs, C, depth, sample,
// max_restarts, purify, purify_a, purify_source, queries.
struct ExperimentConfig {
    enum class Mode { planted, voting } mode = Mode::planted;

    std::uint32_t n = 400;
    std::uint32_t k = 2;
    std::vector<std::uint32_t> domain_sizes; // empty = equal split of n

    // planted mode
    double p_intra = 0.02;
    double p_cross = 0.5;

    // voting mode
    double ratio = 0.02;
    double p_succ = 0.55;
    std::uint32_t votes = 100;
    bool poisson = false;

    double eps = 0.15;
    std::uint32_t k_u = 0; // 0 = k

    GadgetSpec gadget;

    std::vector<std::uint64_t> seeds = {1};

    std::uint32_t quicksort_runs = 0; // 0 = auto
    std::uint32_t copy_cap = 15;      // key "C"
    std::uint32_t depth = 0;          // 0 = stall policy off
    std::uint32_t sample = 0;
    std::uint32_t max_restarts = 32;

    bool purify_on = true;
    double purify_a = 30.0;
    PurifyConfig::Source purify_source = PurifyConfig::Source::regenerate;

    std::size_t queries = 10000;

    void validate() const;

    std::vector<std::uint32_t> resolved_domain_sizes() const;
    std::uint32_t resolved_k_u() const { return k_u ? k_u : k; }

    PlantedSpec planted_spec() const;   // planted mode only
    VotingConfig voting_config() const; // voting mode only
    Bounds bounds() const;

    FindConfig find_config() const;
    QuickSortConfig quicksort_config() const;
    PurifyConfig purify_config() const;
    RankConfig rank_config() const;

    // Builds the configured gadget and attempts verification against k_u
    // (exhaustive when the subset count fits the guard, sampled otherwise).
    // A failed verification leaves the gadget unverified; the pipeline still
    // runs with it.
    Gadget make_gadget(std::uint64_t seed) const;

    static ExperimentConfig parse(std::istream& is);
    static ExperimentConfig load(const std::string& path);
    void set(const std::string& key, const std::string& value);
    std::string to_text() const;
};

} // namespace hr

#endif
