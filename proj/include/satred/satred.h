/* satred — SAT -> 2-SAT / 1-SAT reduction pipeline with a brute-force
 * referee. C API over the C++ core: opaque handles, status codes, and
 * caller-freed strings (satred_string_free). */
#ifndef SATRED_H
#define SATRED_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define SATRED_VERSION_STRING "0.1.0"

typedef enum {
    SATRED_OK = 0,
    SATRED_ERR_PARSE = 1,      /* malformed DIMACS input */
    SATRED_ERR_LIMIT = 2,      /* brute-force variable limit exceeded */
    SATRED_ERR_INVALID = 3,    /* invalid argument */
    SATRED_ERR_SOUNDNESS = 4,  /* mining hit a pipeline-Unsat/oracle-Sat instance */
    SATRED_ERR_INTERNAL = 5
} satred_status;

typedef enum {
    SATRED_SAT = 10,
    SATRED_UNSAT = 20
} satred_verdict;

typedef struct satred_formula satred_formula;

const char* satred_version(void);

/* Frees any string returned through a char** out parameter. */
void satred_string_free(char* s);

/* On failure returns a status code and, when error is non-NULL, a message
 * the caller must free. */
satred_status satred_formula_parse(const char* dimacs, satred_formula** out, char** error);
void satred_formula_free(satred_formula* f);
satred_status satred_formula_serialize(const satred_formula* f, char** out);
int satred_formula_num_vars(const satred_formula* f);
int satred_formula_num_clauses(const satred_formula* f);

/* Compatibility-matrix pipeline verdict. */
satred_status satred_solve(const satred_formula* f, satred_verdict* out);

/* Exhaustive-enumeration verdict; var_limit <= 0 selects the default (26). */
satred_status satred_oracle(const satred_formula* f, int var_limit, satred_verdict* out,
                            char** error);

/* DIMACS text of the emitted 2-SAT (h /\ w) or 1-SAT instance. */
satred_status satred_reduce_2sat(const satred_formula* f, char** out_dimacs);
satred_status satred_reduce_1sat(const satred_formula* f, char** out_dimacs);

/* Single comparison record (oracle vs pipeline vs reductions) as JSON. */
satred_status satred_verify(const satred_formula* f, char** out_json, char** error);

/* Mining run over generated instances; JSON report. exhaustive != 0 ignores
 * seed/sample_count. */
satred_status satred_mine(int max_vars, int max_clauses, int max_width, int exhaustive,
                          uint64_t seed, int sample_count, char** out_json, char** error);

#ifdef __cplusplus
}
#endif

#endif /* SATRED_H */
