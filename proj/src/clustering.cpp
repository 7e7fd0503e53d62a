#include "heterorank/clustering.hpp"

#include <algorithm>

#include "heterorank/rng.hpp"

namespace hr {

std::vector<VertexPair> FindCopy::pairs() const {
    std::vector<VertexPair> out;
    out.reserve(matched.size() * (matched.size() - 1) / 2);
    for (std::size_t i = 0; i < matched.size(); ++i) {
        for (std::size_t j = i + 1; j < matched.size(); ++j) {
            out.emplace_back(matched[i], matched[j]);
        }
    }
    return out;
}

namespace {

// Degree of w into `window` in the required direction, exact.
std::uint32_t directed_degree(const Tournament& t, std::uint32_t w,
                              const VertexSet& window, bool out) {
    return out ? t.out_degree_in(w, window) : t.in_degree_in(w, window);
}

// Sampled pass/fail against threshold c: tests `sample` window members drawn
// without replacement and compares the hit fraction.
bool sampled_pass(const Tournament& t, std::uint32_t w, const VertexSet& window,
                  bool out, double c, std::uint32_t sample, Rng& rng) {
    std::uint32_t size = window.count();
    if (size == 0) return true; // c * 0 = 0
    if (sample == 0 || sample >= size) {
        return directed_degree(t, w, window, out) >= c * size;
    }
    VertexSet probe = window.random_subset(sample, rng);
    std::uint32_t hits = directed_degree(t, w, probe, out);
    return hits >= c * sample;
}

} // namespace

FindOutcome run_searcher(const Tournament& t1, const Gadget& gadget,
                         std::span<const std::uint32_t> pattern_order,
                         std::vector<VertexSet> windows, double c,
                         std::uint32_t sample_size, std::uint64_t seed,
                         std::uint32_t abort_above) {
    const std::size_t h = pattern_order.size();
    if (windows.size() != h) throw ContractError("searcher: |windows| != |pattern|");
    Rng rng(derive_seed(seed, 0x73726368ULL));

    FindCopy copy;
    copy.pattern_order.assign(pattern_order.begin(), pattern_order.end());
    copy.matched.reserve(h);

    for (std::size_t level = 0; level < h; ++level) {
        const std::uint32_t gj = pattern_order[level];

        // required direction per later index is fixed by the pattern
        auto required_out = [&](std::size_t i) {
            return gadget.pattern.has_edge(gj, pattern_order[i]);
        };

        // A later window already empty makes every candidate fail there
        // with degree 0 <= c * 0; declare the scan failed at that index.
        std::size_t empty_at = 0;
        bool have_empty = false;
        for (std::size_t i = level + 1; i < h; ++i) {
            if (windows[i].empty()) {
                empty_at = i;
                have_empty = true;
                break;
            }
        }

        std::vector<std::uint32_t> scan = windows[level].to_vector();
        if (scan.empty()) throw ContractError("searcher: current window is empty");
        rng.shuffle(scan);

        std::int64_t chosen = -1;
        if (!have_empty) {
            for (std::size_t s = 0; s < scan.size() && chosen < 0; ++s) {
                std::uint32_t w = scan[s];
                bool ok = true;
                for (std::size_t i = level + 1; i < h && ok; ++i) {
                    ok = sampled_pass(t1, w, windows[i], required_out(i), c,
                                      sample_size, rng);
                }
                if (ok) chosen = w;
            }
            if (chosen < 0 && sample_size > 0) {
                // sampling may only miss embeddings: re-test exactly before
                // conceding the level
                for (std::size_t s = 0; s < scan.size() && chosen < 0; ++s) {
                    std::uint32_t w = scan[s];
                    bool ok = true;
                    for (std::size_t i = level + 1; i < h && ok; ++i) {
                        std::uint32_t size = windows[i].count();
                        ok = directed_degree(t1, w, windows[i], required_out(i)) >=
                             c * size;
                    }
                    if (ok) chosen = w;
                }
            }
        }

        if (chosen >= 0) {
            std::uint32_t w = static_cast<std::uint32_t>(chosen);
            copy.matched.push_back(w);
            if (abort_above > 0 && copy.matched.size() > abort_above) {
                FindOutcome out;
                out.aborted = true;
                return out;
            }
            for (std::size_t i = level + 1; i < h; ++i) {
                windows[i] = required_out(i) ? t1.out_neighbors_in(w, windows[i])
                                             : t1.in_neighbors_in(w, windows[i]);
            }
            continue;
        }

        // Scan failed: bucket every candidate by one failing index (exact
        // counts; the failing direction is fixed by the pattern, so there are
        // at most h - level - 1 buckets and the largest has at least
        // |W_level| / (h - level - 1) members).
        FindPair pair;
        pair.embedded = static_cast<std::uint32_t>(level);
        pair.window_size = static_cast<std::uint32_t>(scan.size());
        std::vector<std::vector<std::uint32_t>> buckets(h);
        if (have_empty) {
            buckets[empty_at] = windows[level].to_vector();
        } else {
            for (std::uint32_t x : windows[level].to_vector()) {
                for (std::size_t i = level + 1; i < h; ++i) {
                    std::uint32_t size = windows[i].count();
                    if (directed_degree(t1, x, windows[i], required_out(i)) <
                        c * size) {
                        buckets[i].push_back(x);
                        break;
                    }
                }
            }
        }
        std::size_t best = 0;
        std::size_t best_size = 0;
        for (std::size_t i = level + 1; i < h; ++i) {
            if (buckets[i].size() > best_size) {
                best = i;
                best_size = buckets[i].size();
            }
        }
        pair.x = VertexSet(t1.order());
        for (std::uint32_t x : buckets[best]) pair.x.insert(x);
        pair.y = windows[best];
        pair.required_out = required_out(best);
        FindOutcome out;
        out.pair = std::move(pair);
        return out;
    }

    FindOutcome out;
    out.copy = std::move(copy);
    return out;
}

FindOutcome find_embedding(const Gadget& gadget, const Tournament& t1,
                           const VertexSet& alive, double eps, double p_m,
                           const FindConfig& cfg, std::uint64_t copies_found,
                           std::uint64_t seed) {
    const std::uint32_t h = gadget.order();
    const std::uint32_t n1 = alive.count();
    if (n1 < h) {
        throw SizeLimitError("find: " + std::to_string(n1) +
                             " alive vertices cannot host a " + std::to_string(h) +
                             "-vertex pattern");
    }
    double c = cfg.density_threshold > 0.0 ? cfg.density_threshold
                                           : 0.25 * eps * p_m;
    if (!(c > 0.0 && c < 1.0)) throw ConfigError("find: density threshold outside (0,1)");
    const std::uint32_t depth = cfg.depth == 0 ? h : cfg.depth;

    Rng rng(derive_seed(seed, 0x66696e64ULL));
    const std::uint32_t window_size = n1 / h;
    const bool capped = cfg.depth != 0 && copies_found >= cfg.copy_cap;

    for (std::uint32_t attempt = 0;; ++attempt) {
        std::vector<std::uint32_t> order(h);
        for (std::uint32_t i = 0; i < h; ++i) order[i] = i;
        rng.shuffle(order);

        std::vector<std::uint32_t> pool = alive.to_vector();
        rng.shuffle(pool);
        std::vector<VertexSet> windows(h, VertexSet(t1.order()));
        for (std::uint32_t i = 0; i < h; ++i) {
            for (std::uint32_t j = 0; j < window_size; ++j) {
                windows[i].insert(pool[i * window_size + j]);
            }
        }

        // the final attempt after the restart budget runs uncapped so the
        // call always makes progress
        std::uint32_t abort_above =
            capped && attempt < cfg.max_restarts ? depth : 0;
        FindOutcome out = run_searcher(t1, gadget, order, std::move(windows), c,
                                       cfg.sample_size, rng.next(), abort_above);
        out.restarts = attempt;
        if (out.aborted) continue;
        return out;
    }
}

ClusterResult cluster_tournament(const Tournament& t, const Bounds& bounds,
                                 double eps, const Gadget& gadget,
                                 const ClusterConfig& cfg, std::uint64_t seed) {
    const std::uint32_t n = t.order();
    ClusterResult result;
    result.partition.remainder = VertexSet::full(n);
    if (n == 0) return result;

    Tournament working = t;
    VertexSet alive = VertexSet::full(n);
    const double het = bounds.het();
    Rng rng(derive_seed(seed, 0x636c7573ULL));

    while (static_cast<double>(alive.count()) >= eps * n) {
        FindOutcome outcome;
        try {
            outcome = find_embedding(gadget, working, alive, eps, bounds.p_m,
                                     cfg.find, result.copies_found, rng.next());
        } catch (const SizeLimitError&) {
            break; // fewer alive vertices than the pattern: normal stop
        }
        ++result.find_runs;

        if (outcome.is_copy()) {
            auto pairs = outcome.copy->pairs();
            working.erase_pairs(pairs);
            result.pairs_deleted += pairs.size();
            ++result.copies_found;
            result.trace.push_back({result.find_runs, true, {}, -1});
            continue;
        }

        VertexSet z = outcome.pair->x | outcome.pair->y;
        const double z_size = z.count();
        std::int32_t merged = -1;
        std::int32_t least_bad = -1;
        double least_rate = 0.0;
        for (std::size_t i = 0; i < result.partition.clusters.size(); ++i) {
            const VertexSet& cluster = result.partition.clusters[i];
            VertexSet joint = z | cluster;
            Ordering order =
                best_of_runs(t, joint, joint, cfg.quicksort, rng.next());
            std::uint64_t back = t.backward_edges_cross(order, z, cluster);
            double budget =
                (het / 6.0 + 2.0 * eps) * z_size * cluster.count() * bounds.p_u;
            double rate = static_cast<double>(back) / (z_size * cluster.count());
            if (least_bad < 0 || rate < least_rate) {
                least_bad = static_cast<std::int32_t>(i);
                least_rate = rate;
            }
            if (static_cast<double>(back) <= budget) {
                merged = static_cast<std::int32_t>(i);
                break; // smallest index wins
            }
        }
        // A set that matches no cluster opens a new one only while the
        // cluster count sits below k_u (the output never needs more than k
        // parts); past that it joins the least-backward cluster.
        if (merged < 0 && result.partition.clusters.size() >= bounds.k_u) {
            merged = least_bad;
        }
        if (merged >= 0) {
            result.partition.clusters[merged] |= z;
        } else {
            result.partition.clusters.push_back(z);
        }
        alive -= z;
        result.trace.push_back({result.find_runs, false, z.to_vector(), merged});
    }

    result.partition.remainder = alive;
    return result;
}

} // namespace hr
