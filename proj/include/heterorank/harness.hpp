#ifndef HETERORANK_HARNESS_HPP
#define HETERORANK_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "heterorank/config.hpp"
#include "heterorank/eval.hpp"

namespace hr {

struct GeneratedInstance {
    Tournament tournament;
    Tournament check; // independent tournament for the outlier filter
    GroundTruth truth;
};

// Instantiates the experiment's tournament, groundtruth and check
// tournament for one seed.
GeneratedInstance generate_instance(const ExperimentConfig& cfg, std::uint64_t seed);

struct RunArtifacts {
    MetricsRow row;
    RankModel model;
    GroundTruth truth;
    ClusterResult clustering;
};

// Full pipeline for one seed: generate, cluster, purify, rank, evaluate
// against a fresh query sample, plus the unclustered quicksort baseline on
// the identical queries.
RunArtifacts run_pipeline(const ExperimentConfig& cfg, std::uint64_t seed);

// Writes tournament/groundtruth/check files for cmd gen.
void write_instance_files(const GeneratedInstance& inst, const std::string& out_dir,
                          std::uint64_t seed);

// Full run command: one CSV row per seed into <out_dir>/metrics.csv plus
// model files per seed. Returns the CSV text (header + rows).
std::string run_experiment(const ExperimentConfig& cfg, const std::string& out_dir,
                           bool write_files);

} // namespace hr

#endif
