#ifndef ARTHURCOMB_H
#define ARTHURCOMB_H

/*
 * C interface to the Arthur-packet combinatorics engine.
 *
 * All functions returning int use the same convention:
 *   0  success
 *   1  validation error (bad input, bad parameters)
 *   2  check failure (a verification suite found a counterexample)
 * On any nonzero return, *out receives a JSON error object when out is
 * non-NULL.  Every string written to an out parameter is heap-allocated and
 * must be released with ac_free_string.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ac_document ac_document;

/* Parse an input document (JSON text, schema version 1). */
int ac_document_parse(const char* json_text, ac_document** out_doc, char** out_error);

void ac_document_free(ac_document* doc);

/* Block table: (a,b) and (A,B,zeta) per class, with the parity flag. */
int ac_convert(const ac_document* doc, char** out);

/* Packet constituents for the character eps, one '+'/'-' per good-parity
 * class in canonical order. */
int ac_packet(const ac_document* doc, const char* eps, char** out);

/* Decomposition of the induction by `copies` copies of the (rho, a, b) block
 * against the selected packet constituent. */
int ac_induce(const ac_document* doc, const char* eps, int constituent, const char* rho,
              int a, int b, int copies, int margin, char** out);

/* Partial evaluation of a composite derivative; cells is a comma-separated
 * list of half-integers such as "2,3,1,2" or "3/2,1/2". */
int ac_jac(const ac_document* doc, const char* eps, int constituent, const char* rho,
           const char* cells, char** out);

/* Verification suites: "counts", "signs", "ladder-jac", "translation". */
int ac_check(const char* suite, int max_gap, int max_size, char** out);

void ac_free_string(char* s);

const char* ac_version(void);

#ifdef __cplusplus
}
#endif

#endif /* ARTHURCOMB_H */
