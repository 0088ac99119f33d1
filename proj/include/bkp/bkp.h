/* Public C interface of the bilevel interdiction knapsack solver.
 *
 * Every function returns a status code (BKP_OK on success) or a plain value.
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Handles are independent: concurrent use of
 * distinct handles from different threads is safe; a single handle must not
 * be shared between threads without external synchronization.
 *
 * On failure, bkp_last_error() returns a human-readable message for the
 * calling thread, valid until the next failing call on that thread.
 */
#ifndef BKP_H
#define BKP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    BKP_OK = 0,
    BKP_ERR_INVALID_ARGUMENT = 1, /* bad parameter or refused request */
    BKP_ERR_PARSE = 2,            /* malformed instance text */
    BKP_ERR_IO = 3,               /* file not readable/writable */
    BKP_ERR_VALIDATION = 4,       /* instance violates the model assumptions */
    BKP_ERR_GENERATION = 5,       /* no valid instance for this (n, ins) */
    BKP_ERR_NUMERIC = 6,          /* solver could not certify a result */
    BKP_ERR_INTERNAL = 7
};

typedef struct bkp_instance bkp_instance;
typedef struct bkp_solution bkp_solution;

typedef struct bkp_params {
    int32_t alpha;    /* max backward sets per critical candidate */
    int32_t beta;     /* max forward sets */
    int32_t delta;    /* core half-width */
    int32_t mu;       /* max tuple constraints per model */
    int32_t gamma;    /* heuristic integer solves in step 1 */
    double time_limit_s;          /* <= 0 means no limit */
    int32_t reduced_cost_fixing;  /* nonzero enables variable fixing */
} bkp_params;

const char* bkp_version(void);
const char* bkp_last_error(void);

/* Parameter presets: small for a few dozen items, large for hundreds. */
void bkp_params_small(bkp_params* out);
void bkp_params_large(bkp_params* out);

/* Instances ---------------------------------------------------------- */

/* Reproducible random instance: same (n, ins, seed) yields identical data.
 * ins must be in [1, 10]; some small (n, ins) pairs admit no valid instance
 * and report BKP_ERR_GENERATION. */
int bkp_instance_generate(int32_t n, int32_t ins, uint64_t seed, bkp_instance** out);

int bkp_instance_parse(const char* text, bkp_instance** out);
int bkp_instance_load(const char* path, bkp_instance** out);
int bkp_instance_save(const bkp_instance* inst, const char* path);

/* Canonical text form; free the result with bkp_free_text. */
int bkp_instance_format(const bkp_instance* inst, char** text_out);
void bkp_free_text(char* text);

int32_t bkp_instance_n(const bkp_instance* inst);
int64_t bkp_instance_cap_leader(const bkp_instance* inst);
int64_t bkp_instance_cap_follower(const bkp_instance* inst);
int bkp_instance_item(const bkp_instance* inst, int32_t index, int64_t* profit,
                      int64_t* weight, int64_t* leader_weight);

/* Newline-separated report of violated assumptions; empty when valid.
 * Free with bkp_free_text. */
int bkp_instance_validate(const bkp_instance* inst, char** report_out);

void bkp_instance_free(bkp_instance* inst);

/* Solving ------------------------------------------------------------ */

/* Exact solve. With a time limit the call still succeeds and the solution
 * reports proven_optimal = 0 holding the best known values. params may be
 * NULL for the small preset. */
int bkp_solve(const bkp_instance* inst, const bkp_params* params, bkp_solution** out);

/* Exhaustive reference solve; refuses n > hard_limit_n. */
int bkp_oracle(const bkp_instance* inst, int32_t hard_limit_n, bkp_solution** out);

/* 1 when the solution holds a value (it may still be unproven). */
int bkp_solution_has_value(const bkp_solution* sol);
int64_t bkp_solution_value(const bkp_solution* sol);
int bkp_solution_proven_optimal(const bkp_solution* sol);

/* Leader/follower vectors in the instance's item order. Either pointer may
 * be NULL; len must equal the instance size. */
int bkp_solution_vectors(const bkp_solution* sol, int32_t* x, int32_t* y, int32_t len);

double bkp_solution_wall_time_s(const bkp_solution* sol);
int64_t bkp_solution_step2_subproblems(const bkp_solution* sol);
int64_t bkp_solution_crit2_solves(const bkp_solution* sol);
int64_t bkp_solution_cut_rounds(const bkp_solution* sol);
int bkp_solution_entered_step2(const bkp_solution* sol);

void bkp_solution_free(bkp_solution* sol);

#ifdef __cplusplus
}
#endif

#endif /* BKP_H */
