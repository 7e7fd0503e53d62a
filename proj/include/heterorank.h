/* heterorank C API: clustering-based ranking for heavily perturbed
 * preference tournaments.
 *
 * All objects are opaque handles created and released through this API.
 * Functions return HR_OK on success; on failure they return an error code
 * and hr_last_error() describes what went wrong (thread-local).
 */
#ifndef HETERORANK_H
#define HETERORANK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HR_API __declspec(dllexport)
#else
#define HR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hr_status {
    HR_OK = 0,
    HR_ERROR = 1,        /* unexpected failure */
    HR_EINVAL = 2,       /* bad argument */
    HR_EVERTEX = 3,      /* vertex out of range or self pair */
    HR_ESIZE = 4,        /* exhaustive guard refused the instance */
    HR_ECONFIG = 5,      /* configuration invalid */
    HR_EIO = 6,          /* file problem */
    HR_ECONTRACT = 7     /* precondition violated */
} hr_status;

typedef struct hr_tournament hr_tournament;
typedef struct hr_groundtruth hr_groundtruth;
typedef struct hr_gadget hr_gadget;
typedef struct hr_rank_model hr_rank_model;
typedef struct hr_experiment hr_experiment;

HR_API const char* hr_version(void);

/* Message for the most recent failure on this thread. */
HR_API const char* hr_last_error(void);

/* ---- tournaments ------------------------------------------------------ */

HR_API hr_status hr_tournament_load(const char* path, hr_tournament** out);
HR_API hr_status hr_tournament_save(const hr_tournament* t, const char* path);
HR_API void hr_tournament_free(hr_tournament* t);
HR_API uint32_t hr_tournament_order(const hr_tournament* t);
HR_API uint64_t hr_tournament_present_pairs(const hr_tournament* t);
/* dir: 1 = u->v, -1 = v->u, 0 = deleted */
HR_API hr_status hr_tournament_direction(const hr_tournament* t, uint32_t u,
                                         uint32_t v, int* dir);

/* ---- gadgets ----------------------------------------------------------- */

HR_API hr_status hr_gadget_qr(uint32_t prime, hr_gadget** out);
HR_API hr_status hr_gadget_random(uint32_t order, uint64_t seed, hr_gadget** out);
HR_API hr_status hr_gadget_load(const char* path, hr_gadget** out);
HR_API hr_status hr_gadget_save(const hr_gadget* g, const char* path);
HR_API void hr_gadget_free(hr_gadget* g);
HR_API uint32_t hr_gadget_order(const hr_gadget* g);
HR_API hr_status hr_gadget_min_size(uint32_t k_u, double p, uint32_t* order);

/* Verifies the gadget property for k_u. exhaustive != 0 enumerates every
 * subset (HR_ESIZE when infeasible); otherwise `trials` random subsets.
 * On return *ok is 1/0; when 0 and counterexample != NULL, the transitive
 * subset is printed into it (space-separated, cap-terminated). */
HR_API hr_status hr_gadget_verify(hr_gadget* g, uint32_t k_u, int exhaustive,
                                  uint64_t trials, uint64_t seed, int* ok,
                                  char* counterexample, size_t counterexample_len);

/* ---- experiments ------------------------------------------------------- */

HR_API hr_status hr_experiment_default(hr_experiment** out);
HR_API hr_status hr_experiment_load(const char* path, hr_experiment** out);
HR_API void hr_experiment_free(hr_experiment* e);
/* Set one config key ("n", "eps", "gadget", ...) from its text form. */
HR_API hr_status hr_experiment_set(hr_experiment* e, const char* key,
                                   const char* value);
HR_API hr_status hr_experiment_validate(const hr_experiment* e);
/* Serialized config text; returns the number of bytes it wanted to write. */
HR_API hr_status hr_experiment_text(const hr_experiment* e, char* buf, size_t len,
                                    size_t* needed);
HR_API hr_status hr_experiment_seeds(const hr_experiment* e, uint64_t* seeds,
                                     size_t cap, size_t* count);

/* Generates the instance files (tournament, check tournament, groundtruth)
 * for one seed under out_dir. */
HR_API hr_status hr_experiment_generate(const hr_experiment* e, uint64_t seed,
                                        const char* out_dir);

/* Runs the full pipeline for one seed. Returns the metrics CSV row. When
 * out_dir != NULL the rank model file is written there too. */
HR_API hr_status hr_experiment_run_seed(const hr_experiment* e, uint64_t seed,
                                        const char* out_dir, char* csv_row,
                                        size_t csv_row_len);

HR_API hr_status hr_metrics_csv_header(char* buf, size_t len);

/* ---- rank models ------------------------------------------------------- */

HR_API hr_status hr_rank_model_load(const char* path, uint32_t n,
                                    hr_rank_model** out);
HR_API void hr_rank_model_free(hr_rank_model* m);
/* winner receives u or v; unclustered or cross-cluster pairs are decided by
 * a fair coin derived from the seed. */
HR_API hr_status hr_rank_model_query(const hr_rank_model* m, uint32_t u, uint32_t v,
                                     uint64_t seed, uint32_t* winner);

/* ---- benchmark presets ------------------------------------------------- */

/* Newline-separated preset names. */
HR_API hr_status hr_bench_presets(char* buf, size_t len);
HR_API hr_status hr_bench_run(const char* preset, const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif /* HETERORANK_H */
