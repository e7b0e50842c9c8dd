/* afinv.h - C interface to the AF-algebra invariant library.
 *
 * All functions are thread-safe. Results are returned as heap-allocated
 * strings (JSON or DOT) that the caller releases with afinv_string_free().
 * On failure a nonzero status is returned and afinv_last_error() carries a
 * message beginning with the violated condition (e.g. "GcdNotOne: ...").
 */
#ifndef AFINV_H
#define AFINV_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum afinv_status {
  AFINV_OK = 0,
  AFINV_ERR_PARSE = 1,    /* unreadable input or violated input invariant */
  AFINV_ERR_ARGUMENT = 2, /* bad option value, unknown table id, ... */
  AFINV_ERR_BUDGET = 3,   /* enumeration or iteration budget exceeded */
  AFINV_ERR_INTERNAL = 4
} afinv_status;

/* Verdict kinds reported by afinv_compare. */
enum {
  AFINV_VERDICT_ISOMORPHIC = 0,
  AFINV_VERDICT_NON_ISOMORPHIC = 1,
  AFINV_VERDICT_INCONCLUSIVE = 2
};

typedef struct afinv_specimen afinv_specimen;

const char* afinv_version(void);

/* Message of the most recent failure on this thread. */
const char* afinv_last_error(void);

void afinv_string_free(char* s);

/* Accepts "m=1,0,4" or "L=1,2,4". NULL on failure. */
afinv_specimen* afinv_specimen_parse(const char* text);
afinv_specimen* afinv_specimen_from_m(const int64_t* m, size_t n);
void afinv_specimen_free(afinv_specimen* s);

/* opts_json (may be NULL) is an object with optional members:
 *   "primes":  array of torsion primes        (default [2,3,5,7])
 *   "depth":   witness/diagram depth          (default 8 / stabilization+3)
 *   "cap":     membership iteration cap       (default 64)
 *   "check":   run per-specimen self checks   (default false)
 *   "seed":    RNG seed for the self checks   (default 0)
 *   "jobs":    worker threads for enumeration (default 1)
 *   "budget":  enumeration budget             (default 100000)
 *   "classify": classify the enumerated family (default false)
 */
afinv_status afinv_invariants(const afinv_specimen* s, const char* opts_json, char** out_json);

afinv_status afinv_compare(const afinv_specimen* s1, const afinv_specimen* s2,
                           const char* opts_json, char** out_json, int* verdict_kind);

afinv_status afinv_enumerate(int64_t lambda, int n, const char* opts_json, char** out_json);

afinv_status afinv_diagram(const afinv_specimen* s, const char* opts_json, int as_dot, char** out);

/* witness_json: {"type":"lambda-matrix","matrix":[["1","0"],["0","1"]]} or
 * {"type":"block","A":[[...]],"eta":["0",...]}. verified receives 0/1. */
afinv_status afinv_witness_check(const afinv_specimen* s1, const afinv_specimen* s2,
                                 const char* witness_json, const char* opts_json, char** out_json,
                                 int* verified);

/* Regenerates one of the built-in reference tables. */
afinv_status afinv_reproduce(const char* table_id, char** out);

/* Comma-separated list of valid table ids. */
afinv_status afinv_table_ids(char** out);

#ifdef __cplusplus
}
#endif

#endif /* AFINV_H */
