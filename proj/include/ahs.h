#ifndef AHS_H
#define AHS_H

/* Solver laboratory for Hessian-type equations on periodic almost Hermitian
 * model geometries. The library is consumed through opaque handles and
 * integer status codes; every entry point returns a status, and a
 * human-readable explanation of the most recent failure on the calling
 * thread is available from ahs_last_error().
 *
 * Typical use:
 *   ahs_problem* p;  ahs_run* r;
 *   ahs_problem_create_from_file("problem.ini", &p);
 *   ahs_problem_override(p, "grid.size", "12");
 *   int rc = ahs_problem_run(p, "solve", "out", &r);
 *   ... ahs_run_scalar(r, "final_c", &c) ...
 *   ahs_run_destroy(r);  ahs_problem_destroy(p);
 *   return ahs_exit_code(rc);
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. */
enum {
  AHS_OK = 0,
  AHS_CONFIG_ERROR = 1,
  AHS_NOT_CERTIFIED = 2,
  AHS_PATH_FAILURE = 3,
  AHS_INTERNAL_ERROR = 4,
  AHS_ARGUMENT_ERROR = 5,
  AHS_IO_ERROR = 6
};

typedef struct ahs_problem ahs_problem;
typedef struct ahs_run ahs_run;

/* Problem handles carry a parsed, overridable configuration. Creation
 * validates syntax and key types; semantic validation happens when a
 * command runs. An empty string gives the documented defaults. */
int ahs_problem_create_from_file(const char* path, ahs_problem** out);
int ahs_problem_create_from_string(const char* text, ahs_problem** out);

/* Dotted-key override, e.g. ("path.newton_tol", "1e-8"). Unknown keys and
 * ill-typed values are rejected with AHS_CONFIG_ERROR. */
int ahs_problem_override(ahs_problem* p, const char* key, const char* value);

void ahs_problem_destroy(ahs_problem* p);

/* Runs one command: "solve" | "sweep" | "check-subsolution" | "mms" |
 * "report". out_dir, when non-NULL, overrides the configured run.out
 * directory for artifacts. On any outcome that produced a result object
 * (including solver failures) *out is set and carries the message, scalars
 * and table; the return value equals ahs_run_status(*out). Argument
 * mistakes (NULL handle, unknown command) return without creating *out. */
int ahs_problem_run(ahs_problem* p, const char* command, const char* out_dir,
                    ahs_run** out);

int ahs_run_status(const ahs_run* r);
const char* ahs_run_message(const ahs_run* r);

/* Named result scalars (availability depends on the command), e.g. for
 * solve: reached_target, t_final, final_c, final_residual_sup, c_fit, rows,
 * newton_iters_total, krylov_iters_total; for check-subsolution: certified,
 * min_slack, delta, r_reach, witness_point, witness_index; for mms: levels,
 * error_last, order_last, c_abs_max. AHS_ARGUMENT_ERROR if absent. */
int ahs_run_scalar(const ahs_run* r, const char* name, double* out);

/* The table mirrored by the command's CSV artifact. Cells are the exact
 * strings written to the CSV; pointers stay valid until ahs_run_destroy.
 * NULL is returned for out-of-range indices. */
int ahs_run_row_count(const ahs_run* r, size_t* out);
int ahs_run_column_count(const ahs_run* r, size_t* out);
const char* ahs_run_column_name(const ahs_run* r, size_t column);
const char* ahs_run_cell(const ahs_run* r, size_t row, size_t column);

void ahs_run_destroy(ahs_run* r);

/* Stable name for a status code ("ok", "config-error", ...). */
const char* ahs_status_name(int status);

/* Process exit-code contract: 0 success, 1 configuration/argument/input
 * errors, 2 non-certification, 3 path failure, 4 internal invariant
 * violation. */
int ahs_exit_code(int status);

/* Explanation of the most recent failure on this thread; empty string when
 * nothing failed yet. The pointer stays valid until the next library call
 * on the same thread. */
const char* ahs_last_error(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* AHS_H */
