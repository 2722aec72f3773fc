/* C API for the exact generalized-inverse library.
 *
 * Matrices are opaque handles; structured results (certificates, theorem
 * reports, fuzz reports) come back as JSON strings in the documented wire
 * formats. Every function returns a ginv_status; on failure a thread-local
 * message is available through ginv_last_error(). Strings returned through
 * out-parameters must be released with ginv_string_free(), matrices with
 * ginv_matrix_free().
 */
#ifndef GINV_GINV_H
#define GINV_GINV_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ginv_status {
  GINV_OK = 0,
  GINV_ERR_HYPOTHESIS = 1, /* user-supplied instance violates a hypothesis */
  GINV_ERR_CONCLUSION = 2, /* conclusion verification failed */
  GINV_ERR_PARSE = 3,      /* malformed input */
  GINV_ERR_INTERNAL = 4,   /* internal verification failure */
  GINV_ERR_DIMENSION = 5,
  GINV_ERR_SINGULAR = 6,
  GINV_ERR_NOT_HIRANO = 7,
  GINV_ERR_NOT_SDRAZIN = 8,
  GINV_ERR_UNKNOWN_THEOREM = 9,
  GINV_ERR_ARGUMENT = 10,
} ginv_status;

typedef struct ginv_matrix ginv_matrix;

const char* ginv_version(void);
/* Message for the most recent failure on this thread; never NULL. */
const char* ginv_last_error(void);
void ginv_string_free(char* s);
void ginv_matrix_free(ginv_matrix* m);

/* {"rows": n, "cols": m, "entries": [[...], ...]} with rational-string or
 * {"re","im"} entries. */
ginv_status ginv_matrix_from_json(const char* text, ginv_matrix** out);
ginv_status ginv_matrix_to_json(const ginv_matrix* m, char** out);

ginv_status ginv_drazin(const ginv_matrix* a, char** certificate_json);
/* GINV_ERR_NOT_SDRAZIN when a - a^2 is not nilpotent. */
ginv_status ginv_strongly_drazin(const ginv_matrix* a, char** certificate_json);
/* GINV_ERR_NOT_HIRANO when a - a^3 is not nilpotent. */
ginv_status ginv_hirano(const ginv_matrix* a, char** certificate_json);
ginv_status ginv_spectrum(const ginv_matrix* a, char** summary_json);
/* Peirce decomposition of x with respect to the idempotent e. */
ginv_status ginv_peirce(const ginv_matrix* x, const ginv_matrix* e, char** blocks_json);

/* Comma-separated list of known theorem ids. */
ginv_status ginv_theorem_ids(char** csv);
/* Comma-separated input names required by one theorem. */
ginv_status ginv_theorem_input_names(const char* theorem_id, char** csv);

/* Evaluates the hypothesis ledger and, when it holds, certifies the
 * conclusion. The report is always written on a valid call; the status is
 * GINV_OK / GINV_ERR_HYPOTHESIS / GINV_ERR_CONCLUSION accordingly. */
ginv_status ginv_check_theorem(const char* theorem_id, const char* const* input_names,
                               const ginv_matrix* const* inputs, size_t input_count,
                               char** report_json);

/* Seeded fuzz campaign; disabled_hypothesis may be NULL (self-test hook).
 * Status mirrors ginv_check_theorem: GINV_ERR_CONCLUSION if any trial
 * produced a conclusion failure. */
ginv_status ginv_fuzz(const char* theorem_id, size_t dim, uint64_t seed,
                      long entry_bound, size_t trials, const char* disabled_hypothesis,
                      char** report_json);

/* Runs the embedded worked-example regressions; GINV_ERR_CONCLUSION if any
 * claim fails. tamper != 0 deliberately corrupts a fixture (self-test). */
ginv_status ginv_paper_examples(int tamper, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* GINV_GINV_H */
