#ifndef FERMATRANK_H
#define FERMATRANK_H

/* C interface to the fermatrank library.
 *
 * Conventions:
 *   - Every fallible call returns frk_status; FRK_OK means the output
 *     parameters were written.  On failure frk_last_error() describes the
 *     problem until the next call on the same thread.
 *   - Arbitrary-precision values cross the boundary as decimal strings,
 *     "num/den" for rationals.  Strings returned through char** are owned
 *     by the caller and must be released with frk_string_free().
 *   - Handles are opaque; each frk_*_free accepts NULL.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FRK_API __declspec(dllexport)
#else
#define FRK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum frk_status {
  FRK_OK = 0,
  FRK_ERR_ARGUMENT = 1,    /* malformed or out-of-range input */
  FRK_ERR_BUDGET = 2,      /* enumeration budget exceeded */
  FRK_ERR_HYPOTHESIS = 3,  /* required hypothesis flag not asserted */
  FRK_ERR_UNSUPPORTED = 4, /* operation needs an abelian action */
  FRK_ERR_INTERNAL = 5
} frk_status;

FRK_API const char* frk_last_error(void);
FRK_API void frk_string_free(char* s);

/* ---- character actions --------------------------------------------------- */

typedef struct frk_action frk_action;

FRK_API frk_status frk_action_full_units(const char* p, unsigned n,
                                         uint64_t budget, frk_action** out);
FRK_API frk_status frk_action_trivial(const char* p, unsigned n,
                                      frk_action** out);
FRK_API frk_status frk_action_scalar(const char* p, unsigned n,
                                     const char* const* generators,
                                     size_t generator_count, uint64_t budget,
                                     frk_action** out);
/* entries holds 4 * generator_count strings, each matrix row-major. */
FRK_API frk_status frk_action_matrix(const char* p, unsigned n,
                                     const char* const* entries,
                                     size_t generator_count, uint64_t budget,
                                     frk_action** out);
FRK_API void frk_action_free(frk_action* action);

FRK_API uint64_t frk_action_group_order(const frk_action* action);
FRK_API int frk_action_is_abelian(const frk_action* action);

/* ---- orbits and irreducibles --------------------------------------------- */

typedef struct frk_orbit_list frk_orbit_list;

FRK_API frk_status frk_orbits(const frk_action* action, uint64_t budget,
                              frk_orbit_list** out);
FRK_API void frk_orbit_list_free(frk_orbit_list* list);
FRK_API size_t frk_orbit_count(const frk_orbit_list* list);
FRK_API frk_status frk_orbit_get(const frk_orbit_list* list, size_t index,
                                 char** rep_a, char** rep_b, uint64_t* size,
                                 uint64_t* stabilizer_order);

typedef struct frk_irrep_list frk_irrep_list;

FRK_API frk_status frk_irreps(const frk_action* action, uint64_t budget,
                              frk_irrep_list** out);
FRK_API void frk_irrep_list_free(frk_irrep_list* list);
FRK_API size_t frk_irrep_count(const frk_irrep_list* list);
FRK_API frk_status frk_irrep_get(const frk_irrep_list* list, size_t index,
                                 char** orbit_rep_a, char** orbit_rep_b,
                                 uint64_t* dim, int* psi_trivial,
                                 int* fixed_dim);

/* ---- scalar queries ------------------------------------------------------ */

FRK_API frk_status frk_char_order(const char* p, unsigned n, const char* a,
                                  const char* b, char** order_out);
FRK_API frk_status frk_fermat_genus(const char* d, char** genus_out);
/* S_n for the degree-p^n Fermat tower over a base field of degree k over Q. */
FRK_API frk_status frk_rank_sum(const char* p, unsigned n, const char* k_degree,
                                char** sum_out);
FRK_API frk_status frk_fermat_exact_bound(const char* p, unsigned n,
                                          const char* k_degree, const char* c,
                                          int mu_zero, char** bound_out);
FRK_API frk_status frk_filtration_bound(const int64_t* ranks, size_t count,
                                        int64_t h1, size_t start_index,
                                        char** bound_out);

/* ---- report runner ------------------------------------------------------- */

/* Executes one command described by config_json and returns the serialized
 * report.  The config schema matches the "config" object echoed in JSON
 * reports; see the library README. */
FRK_API frk_status frk_run_json(const char* config_json, char** report_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FERMATRANK_H */
