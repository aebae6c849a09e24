#ifndef OTV_H
#define OTV_H

/* C interface to the orbifold topological vertex library. All computation
 * results are returned as JSON text in an opaque buffer owned by the
 * library; calls return OTV_OK on success or a status code, with a
 * human-readable message available from otv_last_error(). */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct otv_buf otv_buf;

enum {
    OTV_OK = 0,
    OTV_E_EMPTY_PARTITION = 1,
    OTV_E_CELL_OUT_OF_SHAPE = 2,
    OTV_E_VAR_TABLE_MISMATCH = 3,
    OTV_E_NOT_A_UNIT = 4,
    OTV_E_NON_CONVERGENT = 5,
    OTV_E_PATCH_TOO_SMALL = 6,
    OTV_E_UNSTABLE = 7,
    OTV_E_OUT_OF_VALIDITY = 8,
    OTV_E_INVALID_DIAGRAM = 9,
    OTV_E_LEMMA_VIOLATED = 10,
    OTV_E_RECURRENCE_VIOLATED = 11,
    OTV_E_BAD_ARGUMENT = 12,
    OTV_E_INTERNAL = 100
};

const char* otv_version(void);

/* worker threads used by the enumeration loops; 0 picks the hardware count */
void otv_set_jobs(int jobs);

/* series of the DT vertex V^n for legs "lambda;mu;nu" (comma-separated
 * parts), exact to the given total degree */
int otv_vertex_dt(int n, const char* legs, int degree, otv_buf** out);

/* method: "enum", "closed", "dt-ratio" or "triangulate" (computes every
 * applicable pipeline and fails unless they agree) */
int otv_vertex_pt(int n, const char* legs, int degree, const char* method, otv_buf** out);

int otv_symfun_hook(const char* nu, int n, int degree, otv_buf** out);
int otv_symfun_loop_schur(const char* nu, int n, int degree, otv_buf** out);
int otv_symfun_skew(const char* xi, const char* eta, const char* nu, int n, int degree,
                    otv_buf** out);

/* which: "recurrence" (args: n, legs, degree, extra = 1|2|3, side),
 *        "correspondence" (n, legs, degree),
 *        "vacuum" (n, degree),
 *        "symmetry" (n, degree, count, seed),
 *        "weights" (count, seed),
 *        "partition-lemmas" (extra = max size).
 * The result JSON carries {"pass": bool, "reports": [...]}. */
int otv_check(const char* which, int n, const char* legs, int degree, int extra,
              const char* side, unsigned long long seed, int count, otv_buf** out);

int otv_glue(const char* diagram_json, int curve_degree, int box_degree, otv_buf** out);

/* render a series JSON as human-readable text */
int otv_series_text(const char* series_json, otv_buf** out);

const char* otv_buf_data(const otv_buf* buf);
size_t otv_buf_size(const otv_buf* buf);
void otv_buf_free(otv_buf* buf);

/* message of the most recent failure on this thread */
const char* otv_last_error(void);

#ifdef __cplusplus
}
#endif

#endif
