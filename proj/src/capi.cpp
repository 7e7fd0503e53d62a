#include "heterorank.h"

#include <cstring>
#include <filesystem>
#include <sstream>
#include <string>

#include "heterorank/bench.hpp"
#include "heterorank/config.hpp"
#include "heterorank/eval.hpp"
#include "heterorank/harness.hpp"
#include "heterorank/io.hpp"

namespace {

thread_local std::string g_last_error;

hr_status fail(hr_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

// Maps the C++ error hierarchy onto status codes around each entry point.
template <typename Fn>
hr_status guarded(Fn&& fn) {
    try {
        fn();
        return HR_OK;
    } catch (const hr::InvalidVertexError& e) {
        return fail(HR_EVERTEX, e.what());
    } catch (const hr::SizeLimitError& e) {
        return fail(HR_ESIZE, e.what());
    } catch (const hr::ConfigError& e) {
        return fail(HR_ECONFIG, e.what());
    } catch (const hr::IoError& e) {
        return fail(HR_EIO, e.what());
    } catch (const hr::ContractError& e) {
        return fail(HR_ECONTRACT, e.what());
    } catch (const std::exception& e) {
        return fail(HR_ERROR, e.what());
    } catch (...) {
        return fail(HR_ERROR, "unknown failure");
    }
}

hr_status copy_out(const std::string& text, char* buf, size_t len, size_t* needed) {
    if (needed) *needed = text.size() + 1;
    if (!buf || len == 0) return HR_OK; // size query
    std::size_t n = std::min(text.size(), len - 1);
    std::memcpy(buf, text.data(), n);
    buf[n] = '\0';
    return n == text.size() ? HR_OK : fail(HR_EINVAL, "buffer too small");
}

} // namespace

struct hr_tournament {
    hr::Tournament t;
};
struct hr_groundtruth {
    hr::GroundTruth g;
};
struct hr_gadget {
    hr::Gadget g;
};
struct hr_rank_model {
    hr::RankModel m;
};
struct hr_experiment {
    hr::ExperimentConfig cfg;
};

extern "C" {

const char* hr_version(void) { return "heterorank 1.0.0"; }

const char* hr_last_error(void) { return g_last_error.c_str(); }

/* ---- tournaments ------------------------------------------------------ */

hr_status hr_tournament_load(const char* path, hr_tournament** out) {
    if (!path || !out) return fail(HR_EINVAL, "null argument");
    return guarded([&] { *out = new hr_tournament{hr::load_tournament(path)}; });
}

hr_status hr_tournament_save(const hr_tournament* t, const char* path) {
    if (!t || !path) return fail(HR_EINVAL, "null argument");
    return guarded([&] { hr::save_tournament(path, t->t); });
}

void hr_tournament_free(hr_tournament* t) { delete t; }

uint32_t hr_tournament_order(const hr_tournament* t) { return t ? t->t.order() : 0; }

uint64_t hr_tournament_present_pairs(const hr_tournament* t) {
    return t ? t->t.present_pair_count() : 0;
}

hr_status hr_tournament_direction(const hr_tournament* t, uint32_t u, uint32_t v,
                                  int* dir) {
    if (!t || !dir) return fail(HR_EINVAL, "null argument");
    return guarded([&] {
        switch (t->t.direction(u, v)) {
        case hr::EdgeState::forward: *dir = 1; break;
        case hr::EdgeState::backward: *dir = -1; break;
        case hr::EdgeState::deleted: *dir = 0; break;
        }
    });
}

/* ---- gadgets ----------------------------------------------------------- */

hr_status hr_gadget_qr(uint32_t prime, hr_gadget** out) {
    if (!out) return fail(HR_EINVAL, "null argument");
    return guarded([&] { *out = new hr_gadget{hr::quadratic_residue_gadget(prime)}; });
}

hr_status hr_gadget_random(uint32_t order, uint64_t seed, hr_gadget** out) {
    if (!out) return fail(HR_EINVAL, "null argument");
    return guarded([&] { *out = new hr_gadget{hr::random_gadget(order, seed)}; });
}

hr_status hr_gadget_load(const char* path, hr_gadget** out) {
    if (!path || !out) return fail(HR_EINVAL, "null argument");
    return guarded([&] { *out = new hr_gadget{hr::load_gadget(path)}; });
}

hr_status hr_gadget_save(const hr_gadget* g, const char* path) {
    if (!g || !path) return fail(HR_EINVAL, "null argument");
    return guarded([&] { hr::save_gadget(path, g->g); });
}

void hr_gadget_free(hr_gadget* g) { delete g; }

uint32_t hr_gadget_order(const hr_gadget* g) { return g ? g->g.order() : 0; }

hr_status hr_gadget_min_size(uint32_t k_u, double p, uint32_t* order) {
    if (!order) return fail(HR_EINVAL, "null argument");
    return guarded([&] { *order = hr::min_gadget_size(k_u, p); });
}

hr_status hr_gadget_verify(hr_gadget* g, uint32_t k_u, int exhaustive, uint64_t trials,
                           uint64_t seed, int* ok, char* counterexample,
                           size_t counterexample_len) {
    if (!g || !ok) return fail(HR_EINVAL, "null argument");
    return guarded([&] {
        hr::GadgetVerifyResult r =
            hr::verify_gadget(g->g, k_u, exhaustive != 0, trials, seed);
        *ok = r.ok ? 1 : 0;
        if (!r.ok && counterexample && counterexample_len > 0) {
            std::ostringstream os;
            for (std::size_t i = 0; i < r.counterexample->size(); ++i) {
                if (i) os << ' ';
                os << (*r.counterexample)[i];
            }
            copy_out(os.str(), counterexample, counterexample_len, nullptr);
        }
    });
}

/* ---- experiments ------------------------------------------------------- */

hr_status hr_experiment_default(hr_experiment** out) {
    if (!out) return fail(HR_EINVAL, "null argument");
    *out = new hr_experiment{};
    return HR_OK;
}

hr_status hr_experiment_load(const char* path, hr_experiment** out) {
    if (!path || !out) return fail(HR_EINVAL, "null argument");
    return guarded([&] { *out = new hr_experiment{hr::ExperimentConfig::load(path)}; });
}

void hr_experiment_free(hr_experiment* e) { delete e; }

hr_status hr_experiment_set(hr_experiment* e, const char* key, const char* value) {
    if (!e || !key || !value) return fail(HR_EINVAL, "null argument");
    return guarded([&] { e->cfg.set(key, value); });
}

hr_status hr_experiment_validate(const hr_experiment* e) {
    if (!e) return fail(HR_EINVAL, "null argument");
    return guarded([&] { e->cfg.validate(); });
}

hr_status hr_experiment_text(const hr_experiment* e, char* buf, size_t len,
                             size_t* needed) {
    if (!e) return fail(HR_EINVAL, "null argument");
    return copy_out(e->cfg.to_text(), buf, len, needed);
}

hr_status hr_experiment_seeds(const hr_experiment* e, uint64_t* seeds, size_t cap,
                              size_t* count) {
    if (!e || !count) return fail(HR_EINVAL, "null argument");
    *count = e->cfg.seeds.size();
    if (seeds) {
        for (std::size_t i = 0; i < std::min(cap, e->cfg.seeds.size()); ++i) {
            seeds[i] = e->cfg.seeds[i];
        }
    }
    return HR_OK;
}

hr_status hr_experiment_generate(const hr_experiment* e, uint64_t seed,
                                 const char* out_dir) {
    if (!e || !out_dir) return fail(HR_EINVAL, "null argument");
    return guarded([&] {
        hr::GeneratedInstance inst = hr::generate_instance(e->cfg, seed);
        hr::write_instance_files(inst, out_dir, seed);
    });
}

hr_status hr_experiment_run_seed(const hr_experiment* e, uint64_t seed,
                                 const char* out_dir, char* csv_row,
                                 size_t csv_row_len) {
    if (!e) return fail(HR_EINVAL, "null argument");
    return guarded([&] {
        hr::RunArtifacts art = hr::run_pipeline(e->cfg, seed);
        if (out_dir) {
            namespace fs = std::filesystem;
            fs::create_directories(out_dir);
            hr::save_rank_model(std::string(out_dir) + "/model_seed" +
                                    std::to_string(seed) + ".txt",
                                art.model);
        }
        if (csv_row && csv_row_len) {
            copy_out(hr::metrics_csv_row(art.row), csv_row, csv_row_len, nullptr);
        }
    });
}

hr_status hr_metrics_csv_header(char* buf, size_t len) {
    return copy_out(hr::metrics_csv_header(), buf, len, nullptr);
}

/* ---- rank models ------------------------------------------------------- */

hr_status hr_rank_model_load(const char* path, uint32_t n, hr_rank_model** out) {
    if (!path || !out) return fail(HR_EINVAL, "null argument");
    return guarded([&] { *out = new hr_rank_model{hr::load_rank_model(path, n)}; });
}

void hr_rank_model_free(hr_rank_model* m) { delete m; }

hr_status hr_rank_model_query(const hr_rank_model* m, uint32_t u, uint32_t v,
                              uint64_t seed, uint32_t* winner) {
    if (!m || !winner) return fail(HR_EINVAL, "null argument");
    return guarded([&] { *winner = hr::answer_query(m->m, u, v, seed); });
}

/* ---- benchmark presets ------------------------------------------------- */

hr_status hr_bench_presets(char* buf, size_t len) {
    std::string text;
    for (const auto& name : hr::bench_preset_names()) {
        text += name;
        text += '\n';
    }
    return copy_out(text, buf, len, nullptr);
}

hr_status hr_bench_run(const char* preset, const char* out_dir) {
    if (!preset || !out_dir) return fail(HR_EINVAL, "null argument");
    return guarded([&] { hr::run_bench_preset(preset, out_dir); });
}

} // extern "C"
