#include "heterorank/bench.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "heterorank/eval.hpp"
#include "heterorank/harness.hpp"
#include "heterorank/svg.hpp"

namespace hr {

std::vector<std::string> bench_preset_names() {
    return {"table1-mini", "figure1-mini", "figure3-purity"};
}

bool is_bench_preset(const std::string& name) {
    auto names = bench_preset_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

ExperimentConfig bench_preset_config(const std::string& name) {
    ExperimentConfig cfg;
    if (name == "table1-mini") {
        cfg.mode = ExperimentConfig::Mode::voting;
        cfg.n = 1000;
        cfg.k = 2;
        cfg.ratio = 0.02;
        cfg.p_succ = 0.55;
        cfg.votes = 100;
        cfg.eps = 0.25;
        cfg.k_u = 2;
        cfg.gadget = {GadgetSpec::Kind::qr, 7, ""};
        cfg.depth = 4;
        cfg.copy_cap = 15;
        cfg.seeds = {1, 2, 3, 4, 5};
    } else if (name == "figure1-mini") {
        cfg.mode = ExperimentConfig::Mode::voting;
        cfg.n = 600;
        cfg.k = 2;
        cfg.p_succ = 0.55;
        cfg.votes = 100;
        cfg.eps = 0.25;
        cfg.k_u = 2;
        cfg.gadget = {GadgetSpec::Kind::qr, 7, ""};
        cfg.depth = 4;
        cfg.seeds = {1, 2, 3};
    } else if (name == "figure3-purity") {
        cfg.mode = ExperimentConfig::Mode::planted;
        cfg.n = 600;
        cfg.k = 3;
        cfg.p_intra = 0.02;
        cfg.p_cross = 0.5;
        cfg.eps = 0.15;
        cfg.k_u = 3;
        cfg.gadget = {GadgetSpec::Kind::qr, 7, ""};
        cfg.depth = 4;
        cfg.seeds = {1, 2, 3, 4, 5};
        cfg.queries = 2000;
    } else {
        throw ConfigError("unknown bench preset '" + name + "'");
    }
    return cfg;
}

namespace {

double mean(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return xs.empty() ? 0.0 : s / xs.size();
}

double stderr_of(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    double m = mean(xs);
    double var = 0.0;
    for (double x : xs) var += (x - m) * (x - m);
    var /= (xs.size() - 1);
    return std::sqrt(var / xs.size());
}

void run_table1(const std::string& out_dir) {
    ExperimentConfig cfg = bench_preset_config("table1-mini");
    std::ofstream os(out_dir + "/table1-mini.csv");
    os << metrics_csv_header() << "\n";
    PlotSeries clustered{"clustered", {}};
    PlotSeries baseline{"global quicksort", {}};
    std::size_t idx = 0;
    for (std::uint64_t seed : cfg.seeds) {
        RunArtifacts art = run_pipeline(cfg, seed);
        os << metrics_csv_row(art.row) << "\n";
        clustered.points.emplace_back(static_cast<double>(idx), art.row.eps_clust);
        baseline.points.emplace_back(static_cast<double>(idx), art.row.eps_baseline);
        ++idx;
    }
    write_svg_line_plot(out_dir + "/table1-mini.svg",
                        "generalization error per seed (n=1000, ratio=0.02)",
                        "seed index", "error", {clustered, baseline});
}

void run_figure1(const std::string& out_dir) {
    ExperimentConfig base = bench_preset_config("figure1-mini");
    const std::vector<double> ratios = {0.02, 0.06, 0.10, 0.15, 0.20};
    std::ofstream os(out_dir + "/figure1-mini.csv");
    os << metrics_csv_header() << "\n";
    std::ofstream agg(out_dir + "/figure1-mini_agg.csv");
    agg << "ratio,eps_clust_mean,eps_clust_stderr,eps_baseline_mean,eps_baseline_stderr\n";
    PlotSeries clustered{"clustered", {}};
    PlotSeries baseline{"global quicksort", {}};
    for (double ratio : ratios) {
        ExperimentConfig cfg = base;
        cfg.ratio = ratio;
        std::vector<double> clust, bases;
        for (std::uint64_t seed : cfg.seeds) {
            RunArtifacts art = run_pipeline(cfg, seed);
            os << metrics_csv_row(art.row) << "\n";
            clust.push_back(art.row.eps_clust);
            bases.push_back(art.row.eps_baseline);
        }
        agg << ratio << ',' << mean(clust) << ',' << stderr_of(clust) << ','
            << mean(bases) << ',' << stderr_of(bases) << "\n";
        clustered.points.emplace_back(ratio, mean(clust));
        baseline.points.emplace_back(ratio, mean(bases));
    }
    write_svg_line_plot(out_dir + "/figure1-mini.svg",
                        "generalization error vs vote ratio (n=600, k=2)",
                        "cross/intra vote ratio", "error", {clustered, baseline});
}

void run_figure3(const std::string& out_dir) {
    ExperimentConfig cfg = bench_preset_config("figure3-purity");
    std::ofstream os(out_dir + "/figure3-purity.csv");
    os << "seed,find_runs,reconstruction\n";
    std::vector<std::vector<std::pair<std::uint64_t, double>>> curves;
    std::uint64_t max_runs = 0;
    std::vector<RunArtifacts> arts;
    for (std::uint64_t seed : cfg.seeds) {
        arts.push_back(run_pipeline(cfg, seed));
        max_runs = std::max(max_runs, arts.back().clustering.find_runs);
    }
    std::vector<std::uint64_t> budgets;
    for (std::uint64_t b = 1; b < max_runs; b = std::max(b + 1, b * 3 / 2)) {
        budgets.push_back(b);
    }
    budgets.push_back(max_runs);
    PlotSeries meanline{"mean over seeds", {}};
    std::vector<double> acc(budgets.size(), 0.0);
    for (std::size_t i = 0; i < arts.size(); ++i) {
        auto curve = reconstruction_curve(arts[i].clustering, arts[i].truth, budgets);
        for (std::size_t j = 0; j < curve.size(); ++j) {
            os << cfg.seeds[i] << ',' << curve[j].first << ',' << curve[j].second << "\n";
            acc[j] += curve[j].second;
        }
    }
    for (std::size_t j = 0; j < budgets.size(); ++j) {
        meanline.points.emplace_back(static_cast<double>(budgets[j]),
                                     acc[j] / arts.size());
    }
    write_svg_line_plot(out_dir + "/figure3-purity.svg",
                        "domain reconstruction vs find runs (n=600, k=3)",
                        "find runs", "reconstructed fraction", {meanline});
}

} // namespace

void run_bench_preset(const std::string& name, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    if (name == "table1-mini") run_table1(out_dir);
    else if (name == "figure1-mini") run_figure1(out_dir);
    else if (name == "figure3-purity") run_figure3(out_dir);
    else throw ConfigError("unknown bench preset '" + name + "'");
}

} // namespace hr
