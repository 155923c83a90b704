/* C interface to the frex algebraic simplification library.
 *
 * All functions return FREX_OK (0) on success; frex_last_error() describes
 * the most recent failure on the calling thread. Objects returned through
 * out-parameters are owned by the caller and released with the matching
 * *_free function.
 */

#ifndef FREX_H
#define FREX_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  FREX_OK = 0,
  FREX_NOT_PROVABLE = 1,
  FREX_PARSE_ERROR = 2,
  FREX_INVALID_ARGUMENT = 3,
  FREX_CHECK_FAILED = 4,
  FREX_UNKNOWN_ALGEBRA = 5,
  FREX_INTERNAL_ERROR = 6
};

typedef struct frex_solver frex_solver;
typedef struct frex_solution frex_solution;

const char* frex_version(void);

/* Message for the last failing call on this thread; empty string if none. */
const char* frex_last_error(void);

/* presentation: "monoid" | "cmonoid" | "invmonoid";
 * mode: "fral" | "frex";
 * algebra: registry name ("nat-add", "nat-mul", "list-concat", "str-concat",
 * "mat2-mul", "string-rev", "list-rev"); required for frex mode, must be
 * NULL for fral mode. Returns NULL on error. */
frex_solver* frex_solver_new(const char* presentation, const char* mode, const char* algebra);
void frex_solver_free(frex_solver* solver);

/* Parses "<lhs> = <rhs>" and runs the solver. On FREX_OK, *out holds the
 * proof; FREX_NOT_PROVABLE means the equation does not hold in the theory.
 */
int frex_solver_solve(frex_solver* solver, const char* goal, frex_solution** out);
void frex_solution_free(frex_solution* solution);

/* Pretty-printed proof; format is "unicode" or "latex". Caller frees the
 * returned buffer with frex_buffer_free. Returns NULL on error. */
char* frex_solution_proof(const frex_solution* solution, const char* format);

/* Number of atomic steps in the (loop-free) linear proof. */
int frex_solution_step_count(const frex_solution* solution);

/* Self-contained certificate for the solved goal; `note` is optional
 * metadata (e.g. a lemma name). Caller frees with frex_buffer_free. */
char* frex_solution_certificate(const frex_solution* solution, const char* note);

/* Verifies certificate bytes with the independent checker. */
int frex_check_certificate(const char* data, size_t len);

void frex_buffer_free(char* buffer);

#ifdef __cplusplus
}
#endif

#endif /* FREX_H */
