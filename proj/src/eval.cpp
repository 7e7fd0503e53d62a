#include "heterorank/eval.hpp"

#include <algorithm>
#include <sstream>

#include "heterorank/rng.hpp"

namespace hr {

PurityReport purity(const Partitioning& partitioning, const GroundTruth& truth) {
    PurityReport report;
    for (const VertexSet& cluster : partitioning.clusters) {
        std::vector<std::uint32_t> by_domain(truth.k(), 0);
        std::uint32_t total = 0;
        cluster.for_each([&](std::uint32_t v) {
            if (v >= truth.n()) throw ContractError("purity: vertex without groundtruth label");
            ++by_domain[truth.domain_of[v]];
            ++total;
        });
        std::uint32_t best = total ? *std::max_element(by_domain.begin(), by_domain.end()) : 0;
        double p = total ? static_cast<double>(best) / total : 1.0;
        report.per_cluster.push_back(p);
        report.min_purity = std::min(report.min_purity, p);
    }
    return report;
}

namespace {

// truth winner of a pair, or n when the pair has no defined truth
std::uint32_t truth_winner(const GroundTruth& truth, std::uint32_t u, std::uint32_t v,
                           bool score_cross) {
    if (truth.same_domain(u, v)) {
        return truth.above_intra(u, v) ? u : v;
    }
    if (!score_cross) return truth.n();
    return truth.domain_of[u] < truth.domain_of[v] ? u : v;
}

} // namespace

ErrorReport generalization_error(const RankModel& model, const GroundTruth& truth,
                                 std::span<const Query> queries, bool score_cross,
                                 std::uint64_t seed) {
    ErrorReport report;
    Rng rng(derive_seed(seed, 0x6576616cULL));
    for (const Query& q : queries) {
        std::uint32_t want = truth_winner(truth, q.u, q.v, score_cross);
        if (want >= truth.n()) {
            ++report.excluded;
            continue;
        }
        std::uint32_t got = answer_query(model, q.u, q.v, rng.next());
        ++report.scored;
        if (got != want) ++report.wrong;
    }
    report.error = report.scored ? static_cast<double>(report.wrong) / report.scored : 0.0;
    return report;
}

ErrorReport baseline_global_quicksort(const Tournament& t, const GroundTruth& truth,
                                      std::span<const Query> queries,
                                      const QuickSortConfig& cfg, bool score_cross,
                                      std::uint64_t seed) {
    VertexSet all = VertexSet::full(t.order());
    Ordering order = best_of_runs(t, all, all, cfg, derive_seed(seed, 0x62617365ULL));
    std::vector<std::uint32_t> position(t.order(), 0);
    for (std::uint32_t i = 0; i < order.size(); ++i) position[order[i]] = i;
    ErrorReport report;
    for (const Query& q : queries) {
        std::uint32_t want = truth_winner(truth, q.u, q.v, score_cross);
        if (want >= truth.n()) {
            ++report.excluded;
            continue;
        }
        std::uint32_t got = position[q.u] < position[q.v] ? q.u : q.v;
        ++report.scored;
        if (got != want) ++report.wrong;
    }
    report.error = report.scored ? static_cast<double>(report.wrong) / report.scored : 0.0;
    return report;
}

std::uint64_t intra_backward_edges(const Tournament& t, const GroundTruth& truth,
                                   const Ordering& order) {
    std::vector<std::uint32_t> position(t.order(), 0);
    for (std::uint32_t i = 0; i < order.size(); ++i) position[order[i]] = i;
    std::uint64_t count = 0;
    for (std::uint32_t u = 0; u < t.order(); ++u) {
        for (std::uint32_t v = u + 1; v < t.order(); ++v) {
            if (!truth.same_domain(u, v)) continue;
            EdgeState d = t.direction(u, v);
            if (d == EdgeState::deleted) continue;
            std::uint32_t from = d == EdgeState::forward ? u : v;
            std::uint32_t to = d == EdgeState::forward ? v : u;
            if (position[to] < position[from]) ++count;
        }
    }
    return count;
}

std::vector<double> kendall_within_domain(const RankModel& model,
                                          const GroundTruth& truth) {
    std::vector<double> out;
    for (std::size_t c = 0; c < model.partition.clusters.size(); ++c) {
        const VertexSet& cluster = model.partition.clusters[c];
        // majority domain of this cluster
        std::vector<std::uint32_t> by_domain(truth.k(), 0);
        cluster.for_each([&](std::uint32_t v) { ++by_domain[truth.domain_of[v]]; });
        std::uint32_t dom = static_cast<std::uint32_t>(
            std::max_element(by_domain.begin(), by_domain.end()) - by_domain.begin());
        // cluster ordering restricted to that domain, positions in theta
        std::vector<std::uint32_t> ranks;
        for (std::uint32_t v : model.orderings[c]) {
            if (truth.domain_of[v] == dom) ranks.push_back(truth.pos_in_domain[v]);
        }
        std::uint64_t inversions = 0;
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            for (std::size_t j = i + 1; j < ranks.size(); ++j) {
                if (ranks[i] > ranks[j]) ++inversions;
            }
        }
        double pairs = static_cast<double>(ranks.size()) * (ranks.size() - 1) / 2.0;
        out.push_back(pairs > 0 ? inversions / pairs : 0.0);
    }
    return out;
}

double domain_reconstruction(const Partitioning& partitioning,
                             const GroundTruth& truth) {
    if (truth.k() == 0) return 0.0;
    std::vector<std::uint32_t> best(truth.k(), 0);
    for (const VertexSet& cluster : partitioning.clusters) {
        std::vector<std::uint32_t> by_domain(truth.k(), 0);
        cluster.for_each([&](std::uint32_t v) { ++by_domain[truth.domain_of[v]]; });
        for (std::size_t d = 0; d < truth.k(); ++d) {
            best[d] = std::max(best[d], by_domain[d]);
        }
    }
    double total = 0.0;
    for (std::size_t d = 0; d < truth.k(); ++d) {
        total += static_cast<double>(best[d]) / truth.domains[d].size();
    }
    return total / truth.k();
}

std::vector<std::pair<std::uint64_t, double>> reconstruction_curve(
    const ClusterResult& result, const GroundTruth& truth,
    std::span<const std::uint64_t> budgets) {
    std::vector<std::pair<std::uint64_t, double>> curve;
    curve.reserve(budgets.size());
    // per-cluster, per-domain membership counts as the trace replays
    std::vector<std::vector<std::uint32_t>> counts;
    std::size_t next_event = 0;
    for (std::uint64_t budget : budgets) {
        while (next_event < result.trace.size() &&
               result.trace[next_event].find_run <= budget) {
            const ClusterEvent& ev = result.trace[next_event];
            ++next_event;
            if (ev.copy) continue;
            std::vector<std::uint32_t>* slot;
            if (ev.merged_into >= 0) {
                slot = &counts[static_cast<std::size_t>(ev.merged_into)];
            } else {
                counts.emplace_back(truth.k(), 0);
                slot = &counts.back();
            }
            for (std::uint32_t v : ev.extracted) ++(*slot)[truth.domain_of[v]];
        }
        double total = 0.0;
        for (std::size_t d = 0; d < truth.k(); ++d) {
            std::uint32_t best = 0;
            for (const auto& c : counts) best = std::max(best, c[d]);
            total += static_cast<double>(best) / truth.domains[d].size();
        }
        curve.emplace_back(budget, truth.k() ? total / truth.k() : 0.0);
    }
    return curve;
}

std::string metrics_csv_header() {
    return "seed,n,k,ratio,p_succ,eps_config,eps_clust,eps_baseline,coverage,"
           "min_purity,clusters,find_runs,copies_found,wall_ms";
}

std::string metrics_csv_row(const MetricsRow& r) {
    std::ostringstream os;
    os << r.seed << ',' << r.n << ',' << r.k << ',' << r.ratio << ',' << r.p_succ
       << ',' << r.eps_config << ',' << r.eps_clust << ',' << r.eps_baseline << ','
       << r.coverage << ',' << r.min_purity << ',' << r.clusters << ','
       << r.find_runs << ',' << r.copies_found << ',' << r.wall_ms;
    return os.str();
}

} // namespace hr
