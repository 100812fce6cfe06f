#ifndef CONGAP_H
#define CONGAP_H

/* C interface to the congruence-gap toolkit: integer polynomials, split and
 * semi-split primes, witness moduli for proper unit subgroups, and
 * cyclotomic irreducibility certificates.
 *
 * Every function returns a congap_status; out-parameters are written only on
 * CONGAP_OK. Handles are freed with their matching *_free; strings returned
 * through char** are freed with congap_string_free. All functions are
 * thread-safe; the error message is per thread.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum congap_status {
    CONGAP_OK = 0,
    CONGAP_ERR_ARGUMENT = 1,            /* bad call: null, range, mismatch */
    CONGAP_ERR_PARSE = 2,               /* polynomial or certificate text rejected */
    CONGAP_ERR_DOMAIN = 3,              /* mathematical precondition violated */
    CONGAP_ERR_SQUARE_DISC = 4,         /* no quadratic subfield: square discriminant */
    CONGAP_ERR_TOO_LARGE = 5,           /* exceeds a configured size cap */
    CONGAP_ERR_REDUCIBLE = 6,           /* polynomial is reducible */
    CONGAP_ERR_UNKNOWN_IRREDUCIBLE = 7, /* irreducibility undecided, not assumed */
    CONGAP_ERR_INTERNAL = 8
} congap_status;

/* Message for the calling thread's most recent failure; never NULL. */
const char* congap_last_error(void);

void congap_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Integer polynomials                                                  */

typedef struct congap_poly congap_poly;

/* Grammar: terms like "x^3 - 2*x + 1" (one optional leading sign), or
 * "coeffs:1,0,-2,1" in descending degree order. */
congap_status congap_poly_parse(const char* text, congap_poly** out);
void congap_poly_free(congap_poly* p);

congap_status congap_poly_format(const congap_poly* p, char** out);
congap_status congap_poly_degree(const congap_poly* p, int* out);
congap_status congap_poly_is_monic(const congap_poly* p, int* out);
congap_status congap_poly_derivative(const congap_poly* p, congap_poly** out);
/* Exact evaluation at a decimal integer; result as a decimal string. */
congap_status congap_poly_eval(const congap_poly* p, const char* x_decimal, char** out_decimal);
congap_status congap_poly_resultant(const congap_poly* p, const congap_poly* q,
                                    char** out_decimal);
congap_status congap_poly_discriminant(const congap_poly* p, char** out_decimal);
/* Discriminant with factorization:
 * {"poly","disc","factors":[{"prime","exponent"}],"cofactor","square"} */
congap_status congap_disc_report_json(const congap_poly* p, char** out_json);

/* ------------------------------------------------------------------ */
/* Split and semi-split primes                                          */

typedef struct congap_split_set congap_split_set;

/* Primes p <= bound where h splits into distinct linear factors mod p.
 * h monic, deg >= 1, disc != 0; bound >= 2. Output is identical for every
 * worker count (0 and 1 both mean single-threaded). */
congap_status congap_split_primes(const congap_poly* h, uint64_t bound, unsigned workers,
                                  congap_split_set** out);
/* Primes p <= bound, p not dividing disc(g), with g having a root mod p. */
congap_status congap_semi_split_primes(const congap_poly* g, uint64_t bound,
                                       congap_split_set** out);
void congap_split_set_free(congap_split_set* s);
congap_status congap_split_set_size(const congap_split_set* s, size_t* out);
congap_status congap_split_set_prime(const congap_split_set* s, size_t index, uint64_t* out);
/* modulus >= 1 adds a per-class histogram; 0 omits it. */
congap_status congap_split_set_json(const congap_split_set* s, uint64_t modulus, char** out_json);

typedef struct congap_density {
    uint64_t bound;
    uint64_t split_count;
    uint64_t prime_count;
    double ratio;
} congap_density;

congap_status congap_density_estimate(const congap_poly* h, uint64_t bound, unsigned workers,
                                      congap_density* out);
/* {"poly","bound","split_count","prime_count","ratio"} plus
 * {"expected","relative_error"} when expected_order >= 1. */
congap_status congap_density_json(const congap_poly* h, uint64_t bound, uint64_t expected_order,
                                  unsigned workers, char** out_json);

/* ------------------------------------------------------------------ */
/* Witness moduli                                                       */

typedef enum congap_search_mode {
    CONGAP_MODE_DIVISORS = 0, /* divisors of |disc h|, plus the quadratic conductor */
    CONGAP_MODE_FULL_SCAN = 1 /* every n <= n_max sharing a factor with disc h */
} congap_search_mode;

typedef struct congap_witness_report {
    uint64_t n;
    uint64_t bound; /* 0 for bound-free quadratic reports */
    uint64_t subgroup_order;
    uint64_t phi;
    uint64_t index;
    uint64_t uncovered_class;
    int proved; /* 1: proved_quadratic, 0: candidate (finite-bound evidence) */
    uint64_t shared_factor;
    uint64_t sample_count;
} congap_witness_report;

typedef struct congap_witness_list congap_witness_list;

congap_status congap_witness_search(const congap_poly* h, uint64_t bound, uint64_t n_max,
                                    congap_search_mode mode, uint64_t min_sample,
                                    unsigned workers, congap_witness_list** out);
void congap_witness_list_free(congap_witness_list* w);
congap_status congap_witness_list_size(const congap_witness_list* w, size_t* out);
congap_status congap_witness_list_report(const congap_witness_list* w, size_t index,
                                         congap_witness_report* out);
congap_status congap_witness_list_notes_size(const congap_witness_list* w, size_t* out);
congap_status congap_witness_list_note(const congap_witness_list* w, size_t index, char** out);
/* {"reports":[{"n","bound","subgroup_order","phi","index","uncovered_class",
 *   "status","shared_factor"}],"suppressed":[...],"notes":[...]} */
congap_status congap_witness_list_json(const congap_witness_list* w, char** out_json);

/* The unconditional witness from the quadratic subfield; fails with
 * CONGAP_ERR_SQUARE_DISC when disc(h) is a perfect square. */
congap_status congap_quadratic_witness(const congap_poly* h, congap_witness_report* out);
congap_status congap_quadratic_witness_json(const congap_poly* h, char** out_json);

/* ------------------------------------------------------------------ */
/* Cyclotomic irreducibility certificates                               */

typedef struct congap_certify_outcome congap_certify_outcome;
typedef struct congap_certificate congap_certificate;

/* One semi-split prime per canonical generator class of (Z/nZ)^x proves the
 * n-th cyclotomic polynomial irreducible over Q[x]/(g). An outcome without a
 * certificate is inconclusive, not a refutation. */
congap_status congap_certify(const congap_poly* g, uint64_t n, uint64_t prime_bound,
                             int assume_irreducible, congap_certify_outcome** out);
void congap_certify_outcome_free(congap_certify_outcome* o);
congap_status congap_certify_outcome_complete(const congap_certify_outcome* o, int* out);
/* {"complete","g","n","prime_bound","assignments","missing"} */
congap_status congap_certify_outcome_json(const congap_certify_outcome* o, char** out_json);
/* The certificate alone: {"g","n","disc_g","assignments":[{"class","prime"}],
 * "prime_bound"}; CONGAP_ERR_DOMAIN when the outcome is incomplete. */
congap_status congap_certify_outcome_certificate_json(const congap_certify_outcome* o,
                                                      char** out_json);

congap_status congap_certificate_parse_json(const char* json_text, congap_certificate** out);
void congap_certificate_free(congap_certificate* c);
congap_status congap_certificate_json(const congap_certificate* c, char** out_json);
/* Re-validates every condition independently. *valid reflects the result;
 * the report is {"valid","checks":[{"check","ok","detail"}]}. */
congap_status congap_certificate_verify(const congap_certificate* c, int* valid,
                                        char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* CONGAP_H */
