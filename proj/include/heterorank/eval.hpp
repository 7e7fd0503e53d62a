#ifndef HETERORANK_EVAL_HPP
#define HETERORANK_EVAL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "heterorank/model.hpp"
#include "heterorank/ranking.hpp"

namespace hr {

struct PurityReport {
    std::vector<double> per_cluster; // max domain share per cluster
    double min_purity = 1.0;
};

PurityReport purity(const Partitioning& partitioning, const GroundTruth& truth);

struct ErrorReport {
    double error = 0.0;    // wrong / scored
    std::size_t scored = 0;
    std::size_t excluded = 0; // cross queries without a defined truth
    std::size_t wrong = 0;
};

// Fraction of queries whose answer contradicts the groundtruth. Intra pairs
// score against the canonical domain order; cross pairs against the global
// order when score_cross is set, otherwise they are excluded (the planted
// model defines no cross-domain truth).
ErrorReport generalization_error(const RankModel& model, const GroundTruth& truth,
                                 std::span<const Query> queries, bool score_cross,
                                 std::uint64_t seed);

// Ranks the whole vertex set with unrestricted pivots and answers every
// query from that single ordering.
ErrorReport baseline_global_quicksort(const Tournament& t, const GroundTruth& truth,
                                      std::span<const Query> queries,
                                      const QuickSortConfig& cfg, bool score_cross,
                                      std::uint64_t seed);

// Backward edges of the given global ordering restricted to intra-domain
// pairs (the quadratic-failure signature of unclustered ranking).
std::uint64_t intra_backward_edges(const Tournament& t, const GroundTruth& truth,
                                   const Ordering& order);

// Normalized inversion count between each cluster ordering restricted to its
// majority domain and that domain's canonical order; indexed by cluster.
std::vector<double> kendall_within_domain(const RankModel& model,
                                          const GroundTruth& truth);

// Mean over domains of the best single-cluster recall of that domain; the
// Figure-3 style "how much of the groundtruth is already reconstructed".
double domain_reconstruction(const Partitioning& partitioning,
                             const GroundTruth& truth);

// Reconstruction after the first `budget` find runs, replayed from the
// clustering trace, for each requested budget (cumulative, so the curve is
// non-decreasing per construction of the trace).
std::vector<std::pair<std::uint64_t, double>> reconstruction_curve(
    const ClusterResult& result, const GroundTruth& truth,
    std::span<const std::uint64_t> budgets);

struct MetricsRow {
    std::uint64_t seed = 0;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    double ratio = 0.0;
    double p_succ = 0.0;
    double eps_config = 0.0;
    double eps_clust = 0.0;    // generalization error of the clustered model
    double eps_baseline = 0.0; // generalization error of global quicksort
    double coverage = 0.0;
    double min_purity = 0.0;
    std::uint32_t clusters = 0;
    std::uint64_t find_runs = 0;
    std::uint64_t copies_found = 0;
    std::uint64_t wall_ms = 0;
};

std::string metrics_csv_header();
std::string metrics_csv_row(const MetricsRow& row);

} // namespace hr

#endif
