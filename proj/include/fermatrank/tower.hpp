#pragma once

// The geometric and field-theoretic ladder of the Fermat tower: genus and
// Jacobian dimension at each level, the new-part dimensions dim J'_n, the
// cyclotomic field degrees [F_n : Q], and the degree-weighted sum
// S_n = sum_i dim J'_i / [F_i : K] that drives the rank bounds.  All sums
// are exact rationals.

#include <map>
#include <vector>

#include "fermatrank/errors.hpp"
#include "fermatrank/numeric.hpp"

namespace fermatrank {

struct TowerLevel {
  Int p;
  unsigned n = 0;
  Int degree;        // p^n
  Int genus;         // (d-1)(d-2)/2
  Int dim_jacobian;  // = genus
  Int dim_new_part;  // dim J'_n = dim J_n - dim J_(n-1); 0 at n = 0
};

// Degrees [F_i : Q] for i = 0..n where F = K(zeta_p) and F_i = F(mu_p^i).
class FieldDegrees {
 public:
  FieldDegrees(Int k_degree, std::vector<Int> f_over_q);

  const Int& k_degree() const noexcept { return k_degree_; }
  const Int& f_degree() const noexcept { return f_over_q_.front(); }  // [F:Q]
  unsigned max_level() const noexcept { return static_cast<unsigned>(f_over_q_.size()) - 1; }
  const Int& f_over_q(unsigned i) const;
  Int f_over_k(unsigned i) const;  // [F_i : K] = [F_i : Q] / [K : Q]

 private:
  Int k_degree_;
  std::vector<Int> f_over_q_;
};

// Genus of the smooth plane curve of degree d.
Int fermat_genus(const Int& d);

TowerLevel tower_level(const Int& p, unsigned n);

// Degrees under the maximal-growth default: [F:Q] = [K:Q](p-1) and
// [F_i : F] = p^(i-1) for i >= 1.  Entries of `overrides` (level ->
// [F_i:Q]) replace computed values.  With linearly_disjoint = false no
// default is trusted and every level must be overridden explicitly.
// Violations of the divisibility invariants raise inconsistent_override.
FieldDegrees field_degrees(const Int& p, unsigned n, const Int& k_degree,
                           bool linearly_disjoint = true,
                           const std::map<unsigned, Int>& overrides = {});

// S_n = sum_{i=0}^{n} dim J'_i / [F_i : K], exactly.
Rat rank_sum(const Int& p, unsigned n, const FieldDegrees& degrees);

// S_n / p^n.
Rat sum_growth_ratio(const Int& p, unsigned n, const FieldDegrees& degrees);

struct TowerTable {
  std::vector<TowerLevel> levels;  // 0..n_max
  FieldDegrees degrees;
  std::vector<Rat> partial_sums;  // S_0..S_n_max
};

TowerTable build_tower_table(const Int& p, unsigned n_max, const FieldDegrees& degrees);

}  // namespace fermatrank
