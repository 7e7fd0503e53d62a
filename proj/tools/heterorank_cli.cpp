// heterorank command line: generate instances, run the pipeline, build and
// verify gadgets, run benchmark presets. Talks to the core exclusively
// through the C API in heterorank.h.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "heterorank.h"

namespace {

// exit codes: 0 ok, 1 pipeline failure, 2 config error, 3 feasibility refusal
int exit_code_for(hr_status status) {
    switch (status) {
    case HR_OK: return 0;
    case HR_ECONFIG:
    case HR_EINVAL:
    case HR_EIO: return 2;
    case HR_ESIZE: return 3;
    default: return 1;
    }
}

int die(hr_status status) {
    std::fprintf(stderr, "error: %s\n", hr_last_error());
    return exit_code_for(status);
}

struct ExperimentHandle {
    hr_experiment* ptr = nullptr;
    ~ExperimentHandle() { hr_experiment_free(ptr); }
};

struct CommonOpts {
    std::string config;
    std::string out = "out";
    std::vector<std::uint64_t> seeds;
    std::string gadget;
    bool no_purify = false;
    int runs = -1;
    int depth = -1;
    int copies = -1;
    int sample = -1;
    double eps = -1.0;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool config_required) {
    auto* c = cmd->add_option("--config", opts.config, "experiment config file");
    if (config_required) c->required();
    cmd->add_option("--out", opts.out, "output directory");
    cmd->add_option("--seed,--seeds", opts.seeds, "seed list (overrides config)");
    cmd->add_option("--gadget", opts.gadget, "gadget spec: 'qr <p>' | 'random <h>' | 'file <path>'");
    cmd->add_flag("--no-purify", opts.no_purify, "skip the outlier filter");
    cmd->add_option("--runs", opts.runs, "quicksort repetitions (0 = auto)");
    cmd->add_option("--depth", opts.depth, "stall-retry depth d");
    cmd->add_option("--copies", opts.copies, "copy cap C before stall retries");
    cmd->add_option("--sample", opts.sample, "window sample size (0 = exact)");
    cmd->add_option("--eps", opts.eps, "precision parameter");
}

hr_status apply_common(hr_experiment* exp, const CommonOpts& opts) {
    hr_status st = HR_OK;
    auto set = [&](const char* key, const std::string& value) {
        if (st == HR_OK) st = hr_experiment_set(exp, key, value.c_str());
    };
    if (!opts.seeds.empty()) {
        std::string list;
        for (std::uint64_t s : opts.seeds) {
            if (!list.empty()) list += ' ';
            list += std::to_string(s);
        }
        set("seeds", list);
    }
    if (!opts.gadget.empty()) set("gadget", opts.gadget);
    if (opts.no_purify) set("purify", "off");
    if (opts.runs >= 0) set("quicksort_runs", std::to_string(opts.runs));
    if (opts.depth >= 0) set("depth", std::to_string(opts.depth));
    if (opts.copies >= 0) set("C", std::to_string(opts.copies));
    if (opts.sample >= 0) set("sample", std::to_string(opts.sample));
    if (opts.eps >= 0.0) set("eps", std::to_string(opts.eps));
    if (st == HR_OK) st = hr_experiment_validate(exp);
    return st;
}

hr_status load_experiment(const CommonOpts& opts, ExperimentHandle& handle) {
    if (!opts.config.empty()) return hr_experiment_load(opts.config.c_str(), &handle.ptr);
    return hr_experiment_default(&handle.ptr);
}

int cmd_gen(const CommonOpts& opts) {
    ExperimentHandle exp;
    hr_status st = load_experiment(opts, exp);
    if (st != HR_OK) return die(st);
    st = apply_common(exp.ptr, opts);
    if (st != HR_OK) return die(st);

    std::uint64_t seeds[256];
    size_t count = 0;
    hr_experiment_seeds(exp.ptr, seeds, 256, &count);
    for (size_t i = 0; i < count && i < 256; ++i) {
        st = hr_experiment_generate(exp.ptr, seeds[i], opts.out.c_str());
        if (st != HR_OK) return die(st);
        std::printf("wrote instance files for seed %llu under %s\n",
                    static_cast<unsigned long long>(seeds[i]), opts.out.c_str());
    }
    return 0;
}

int cmd_run(const CommonOpts& opts) {
    ExperimentHandle exp;
    hr_status st = load_experiment(opts, exp);
    if (st != HR_OK) return die(st);
    st = apply_common(exp.ptr, opts);
    if (st != HR_OK) return die(st);

    char header[256];
    hr_metrics_csv_header(header, sizeof header);
    std::string csv = std::string(header) + "\n";
    std::printf("%s\n", header);

    std::uint64_t seeds[256];
    size_t count = 0;
    hr_experiment_seeds(exp.ptr, seeds, 256, &count);
    for (size_t i = 0; i < count && i < 256; ++i) {
        char row[512];
        st = hr_experiment_run_seed(exp.ptr, seeds[i], opts.out.c_str(), row, sizeof row);
        if (st != HR_OK) return die(st);
        std::printf("%s\n", row);
        std::fflush(stdout);
        csv += std::string(row) + "\n";
    }
    std::string path = opts.out + "/metrics.csv";
    if (FILE* f = std::fopen(path.c_str(), "w")) {
        std::fputs(csv.c_str(), f);
        std::fclose(f);
    } else {
        std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
        return 1;
    }
    return 0;
}

int gadget_make(const std::string& kind, std::uint32_t param, std::uint64_t seed,
                std::uint32_t ku, const std::string& verify, std::uint64_t trials,
                const std::string& out) {
    hr_gadget* g = nullptr;
    hr_status st = kind == "qr" ? hr_gadget_qr(param, &g)
                                : hr_gadget_random(param, seed, &g);
    if (st != HR_OK) return die(st);
    std::unique_ptr<hr_gadget, decltype(&hr_gadget_free)> guard(g, hr_gadget_free);

    if (verify != "none") {
        int ok = 0;
        char counter[512];
        st = hr_gadget_verify(g, ku, verify == "exhaustive" ? 1 : 0, trials, seed,
                              &ok, counter, sizeof counter);
        if (st != HR_OK) return die(st);
        if (!ok) {
            std::fprintf(stderr, "gadget fails the property for k_u=%u: transitive subset {%s}\n",
                         ku, counter);
            return 1;
        }
        std::printf("gadget verified (%s) for k_u=%u\n", verify.c_str(), ku);
    }
    st = hr_gadget_save(g, out.c_str());
    if (st != HR_OK) return die(st);
    std::printf("wrote %s\n", out.c_str());
    return 0;
}

int gadget_verify_file(const std::string& path, std::uint32_t ku,
                       const std::string& mode, std::uint64_t trials,
                       std::uint64_t seed) {
    hr_gadget* g = nullptr;
    hr_status st = hr_gadget_load(path.c_str(), &g);
    if (st != HR_OK) return die(st);
    std::unique_ptr<hr_gadget, decltype(&hr_gadget_free)> guard(g, hr_gadget_free);
    int ok = 0;
    char counter[512];
    st = hr_gadget_verify(g, ku, mode == "exhaustive" ? 1 : 0, trials, seed, &ok,
                          counter, sizeof counter);
    if (st != HR_OK) return die(st);
    if (!ok) {
        std::printf("NOT a gadget for k_u=%u: transitive subset {%s}\n", ku, counter);
        return 1;
    }
    std::printf("gadget property holds for k_u=%u (%s)\n", ku, mode.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"clustering-based ranking for heavily perturbed preference tournaments"};
    app.require_subcommand(1);

    CommonOpts gen_opts, run_opts;
    auto* gen = app.add_subcommand("gen", "generate tournament/groundtruth files");
    add_common(gen, gen_opts, false);
    auto* run = app.add_subcommand("run", "run the full pipeline, one CSV row per seed");
    add_common(run, run_opts, false);

    auto* gadget = app.add_subcommand("gadget", "make or verify gadget tournaments");
    gadget->require_subcommand(1);
    std::string g_kind;
    std::uint32_t g_param = 7;
    std::uint64_t g_seed = 1;
    std::uint32_t g_ku = 2;
    std::string g_verify = "exhaustive";
    std::uint64_t g_trials = 20000;
    std::string g_out = "gadget.txt";
    std::string g_file;
    auto* gmake = gadget->add_subcommand("make", "construct a gadget");
    std::uint32_t g_qr = 0, g_random = 0;
    gmake->add_option("--qr", g_qr, "quadratic-residue gadget on prime p (p = 3 mod 4)");
    gmake->add_option("--random", g_random, "uniform random gadget of this order");
    gmake->add_option("--seed", g_seed, "seed for random construction");
    gmake->add_option("--ku", g_ku, "domain-count bound to verify against");
    gmake->add_option("--verify", g_verify, "exhaustive | sampled | none");
    gmake->add_option("--trials", g_trials, "subsets for sampled verification");
    gmake->add_option("--out", g_out, "output file");
    auto* gverify = gadget->add_subcommand("verify", "verify a gadget file");
    gverify->add_option("file", g_file, "gadget file")->required();
    gverify->add_option("--ku", g_ku, "domain-count bound");
    gverify->add_option("--mode", g_verify, "exhaustive | sampled");
    gverify->add_option("--trials", g_trials, "subsets for sampled verification");
    gverify->add_option("--seed", g_seed, "seed for sampled verification");

    auto* bench = app.add_subcommand("bench", "run a benchmark preset (CSV + SVG)");
    std::string b_preset, b_out = "bench_out";
    bench->add_option("--preset", b_preset, "table1-mini | figure1-mini | figure3-purity")
        ->required();
    bench->add_option("--out", b_out, "output directory");

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) return cmd_gen(gen_opts);
    if (run->parsed()) return cmd_run(run_opts);
    if (gadget->parsed()) {
        if (gmake->parsed()) {
            if ((g_qr == 0) == (g_random == 0)) {
                std::fprintf(stderr, "error: pass exactly one of --qr / --random\n");
                return 2;
            }
            if (g_verify != "exhaustive" && g_verify != "sampled" && g_verify != "none") {
                std::fprintf(stderr, "error: --verify must be exhaustive, sampled or none\n");
                return 2;
            }
            return gadget_make(g_qr ? "qr" : "random", g_qr ? g_qr : g_random, g_seed,
                               g_ku, g_verify, g_trials, g_out);
        }
        return gadget_verify_file(g_file, g_ku, g_verify == "sampled" ? "sampled" : "exhaustive",
                                  g_trials, g_seed);
    }
    if (bench->parsed()) {
        hr_status st = hr_bench_run(b_preset.c_str(), b_out.c_str());
        if (st != HR_OK) return die(st);
        std::printf("wrote preset outputs under %s\n", b_out.c_str());
        return 0;
    }
    return 2;
}
