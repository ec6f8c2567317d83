#pragma once

// H^1-dimension bookkeeping and rank-bound assembly.  Three layers:
//   * the unipotent-filtration bound (sum of quotient ranks times the base
//     H^1 dimension) and its subquotient corollary;
//   * the descent bound 2 * h1 * dim A, gated on the caller asserting that
//     the Galois action on the base homology mod p is trivial;
//   * the cyclotomic-tower refinements, gated on the caller asserting that
//     the relevant mu-invariant vanishes: h1 over F_n bounded by
//     (1/2)([F_n:Q] + C), the per-level rank bound dim A * ([F_n:Q] + C),
//     and the assembled Fermat-tower bounds [K:Q] dim J_n + C * S_n (exact)
//     and [K:Q] dim J_n + C' p^n (asymptotic, C' derived from the computed
//     sup of S_n / p^n and therefore flagged heuristic).
// h1 and C are arithmetic inputs supplied by the caller, never computed
// here.

#include <cstddef>
#include <vector>

#include "fermatrank/numeric.hpp"
#include "fermatrank/tower.hpp"

namespace fermatrank {

// Successive quotient ranks r_0..r_(N-1) of a filtration with
// trivial-action quotients (Z/pZ)^(r_i).
struct FiltrationData {
  std::vector<Int> ranks;

  Int total_dim() const;
};

// Cohomological inputs.  h1_base and iwasawa_c are user-supplied; the
// library never evaluates them from arithmetic data.
struct CohomParams {
  Int h1_base = 1;            // dim H^1(G_T(F), F_p)
  Int f_degree_over_q = 2;    // [F:Q]
  Rat iwasawa_c = 0;          // the constant C
  bool mu_zero_asserted = false;
};

// (sum_{j >= i} r_j) * h1.  With i = 0 this is the full filtration bound.
Int filtration_h1_bound(const FiltrationData& filtration, const Int& h1,
                        std::size_t start_index);

// dim V * h1 for a subquotient V.
Int subquotient_h1_bound(const Int& dim_v, const Int& h1);

// 2 * h1 * dim A; requires the triviality hypothesis to be asserted.
Int theorem_main_bound(const Int& dim_a, const Int& h1, bool triviality_asserted);
// Rational-h1 overload so the bound composes exactly with
// iwasawa_h1_bound.
Rat theorem_main_bound(const Int& dim_a, const Rat& h1, bool triviality_asserted);

// 1 + dim H^1(G_T(F_infinity), F_p)^(Gal fixed part).
Int h1_level_from_infinity(const Int& dim_infinity_fixed);

// (1/2)([F_n:Q] + C); requires mu_zero_asserted.
Rat iwasawa_h1_bound(const CohomParams& params, const Int& fn_degree_over_q);

// dim A * ([F_n:Q] + C); equals theorem_main_bound composed with
// iwasawa_h1_bound.
Rat prop_fnrank_bound(const Int& dim_a, const Int& fn_degree_over_q, const Rat& c,
                      bool mu_zero_asserted);

// [K:Q] * dim J_n + C * S_n, exactly.
Rat fermat_rank_bound_exact(const Int& p, unsigned n, const FieldDegrees& degrees,
                            const Rat& c, bool mu_zero_asserted);

struct AsymptoticBound {
  Rat c_prime;                 // C * max_{1 <= n <= n_max} S_n / p^n
  std::vector<Rat> per_level;  // [K:Q] dim J_n + c_prime * p^n for n = 0..n_max
};

// The asymptotic form with C' derived from the computed ratios; heuristic
// in the sense that C' is a witness over the requested range, not a
// closed-form constant.
AsymptoticBound fermat_rank_bound_asymptotic(const Int& p, unsigned n_max,
                                             const FieldDegrees& degrees, const Rat& c);

// rank_bound < dim J, the Chabauty-Coleman applicability condition.
bool chabauty_check(const Rat& rank_bound, const Int& dim_j);

enum class BoundKind { theorem_main, prop_fnrank, fermat_exact, fermat_asymptotic };

const char* bound_kind_name(BoundKind kind);

struct LevelBound {
  unsigned n = 0;
  Int p_n;
  Int dim_j;
  Int fn_degree_over_q;
  Rat s_n;
  Rat exact_bound;
  Rat asymptotic_bound;
  bool chabauty_exact = false;
};

// Inputs echoed alongside the per-level bound ladder.
struct BoundReport {
  Int p;
  unsigned n_max = 0;
  Int k_degree;
  Rat c;
  Int h1_base;
  bool mu_zero_asserted = false;
  bool triviality_asserted = false;
  Rat c_prime;
  std::vector<LevelBound> levels;
};

BoundReport assemble_bound_report(const Int& p, unsigned n_max, const FieldDegrees& degrees,
                                  const Rat& c, const Int& h1_base, bool mu_zero_asserted,
                                  bool triviality_asserted);

}  // namespace fermatrank
