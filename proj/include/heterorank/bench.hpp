#ifndef HETERORANK_BENCH_HPP
#define HETERORANK_BENCH_HPP

#include <string>
#include <vector>

#include "heterorank/config.hpp"

namespace hr {

// Desk-scale experiment presets. Each writes CSV (canonical) plus an SVG
// line plot into the output directory.
//   table1-mini     one voting config, clustered vs unclustered error
//   figure1-mini    error as a function of the cross/intra vote ratio
//   figure3-purity  reconstructed-domain purity vs find-run budget
std::vector<std::string> bench_preset_names();

bool is_bench_preset(const std::string& name);

// Base config of a preset (sweeps derive from it).
ExperimentConfig bench_preset_config(const std::string& name);

void run_bench_preset(const std::string& name, const std::string& out_dir);

} // namespace hr

#endif
