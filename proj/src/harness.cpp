#include "heterorank/harness.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>

#include "heterorank/io.hpp"
#include "heterorank/rng.hpp"

namespace hr {

GeneratedInstance generate_instance(const ExperimentConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    if (cfg.mode == ExperimentConfig::Mode::planted) {
        PlantedSpec spec = cfg.planted_spec();
        auto [t, truth] = generate_planted(spec, derive_seed(seed, 0x6d61696eULL));
        auto [check, truth2] = generate_planted(spec, derive_seed(seed, 0x636865636bULL));
        (void)truth2; // same geometry by construction
        return {std::move(t), std::move(check), std::move(truth)};
    }
    VotingConfig vc = cfg.voting_config();
    auto sizes = cfg.resolved_domain_sizes();
    if (cfg.purify_source == PurifyConfig::Source::vote_split) {
        VotingSplitResult split =
            generate_voting_split(vc, sizes, derive_seed(seed, 0x6d61696eULL));
        return {std::move(split.first), std::move(split.second), std::move(split.truth)};
    }
    VotingResult main = generate_voting(vc, sizes, derive_seed(seed, 0x6d61696eULL));
    VotingResult fresh = generate_voting(vc, sizes, derive_seed(seed, 0x636865636bULL));
    return {std::move(main.tournament), std::move(fresh.tournament), std::move(main.truth)};
}

RunArtifacts run_pipeline(const ExperimentConfig& cfg, std::uint64_t seed) {
    auto start = std::chrono::steady_clock::now();
    GeneratedInstance inst = generate_instance(cfg, seed);
    Bounds bounds = cfg.bounds();
    Gadget gadget = cfg.make_gadget(derive_seed(seed, 0x67ULL));
    RankConfig rank_cfg = cfg.rank_config();

    RankBuildResult built =
        hetero_rank(inst.tournament, &inst.check, bounds, cfg.eps, gadget, rank_cfg,
                    derive_seed(seed, 0x70697065ULL));

    bool voting = cfg.mode == ExperimentConfig::Mode::voting;
    double w_intra = voting ? static_cast<double>(cfg.votes) : 1.0;
    double w_cross = voting ? std::lround(cfg.ratio * cfg.votes) : 1.0;
    std::vector<Query> queries = sample_queries(inst.truth, w_intra, w_cross,
                                                cfg.queries, derive_seed(seed, 0x71ULL));

    ErrorReport clustered = generalization_error(built.model, inst.truth, queries,
                                                 voting, derive_seed(seed, 0x6531ULL));
    ErrorReport baseline =
        baseline_global_quicksort(inst.tournament, inst.truth, queries,
                                  cfg.quicksort_config(), voting,
                                  derive_seed(seed, 0x6532ULL));
    PurityReport pure = purity(built.model.partition, inst.truth);

    auto end = std::chrono::steady_clock::now();

    RunArtifacts out{{}, std::move(built.model), std::move(inst.truth),
                     std::move(built.clustering)};
    MetricsRow& row = out.row;
    row.seed = seed;
    row.n = cfg.n;
    row.k = cfg.k;
    row.ratio = voting ? cfg.ratio : 0.0;
    row.p_succ = voting ? cfg.p_succ : 1.0 - cfg.p_intra;
    row.eps_config = cfg.eps;
    row.eps_clust = clustered.error;
    row.eps_baseline = baseline.error;
    row.coverage = static_cast<double>(out.model.partition.covered()) / cfg.n;
    row.min_purity = pure.per_cluster.empty() ? 0.0 : pure.min_purity;
    row.clusters = static_cast<std::uint32_t>(out.model.partition.clusters.size());
    row.find_runs = out.clustering.find_runs;
    row.copies_found = out.clustering.copies_found;
    row.wall_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count());
    return out;
}

void write_instance_files(const GeneratedInstance& inst, const std::string& out_dir,
                          std::uint64_t seed) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    std::string tag = "_seed" + std::to_string(seed);
    save_tournament(out_dir + "/tournament" + tag + ".txt", inst.tournament);
    save_tournament(out_dir + "/check" + tag + ".txt", inst.check);
    save_groundtruth(out_dir + "/groundtruth" + tag + ".txt", inst.truth);
}

std::string run_experiment(const ExperimentConfig& cfg, const std::string& out_dir,
                           bool write_files) {
    namespace fs = std::filesystem;
    cfg.validate();
    if (write_files) fs::create_directories(out_dir);
    std::string csv = metrics_csv_header() + "\n";
    for (std::uint64_t seed : cfg.seeds) {
        RunArtifacts art = run_pipeline(cfg, seed);
        csv += metrics_csv_row(art.row) + "\n";
        if (write_files) {
            save_rank_model(out_dir + "/model_seed" + std::to_string(seed) + ".txt",
                            art.model);
        }
    }
    if (write_files) {
        std::ofstream os(out_dir + "/metrics.csv");
        if (!os) throw IoError("cannot write metrics.csv under " + out_dir);
        os << csv;
    }
    return csv;
}

} // namespace hr
