#include "fermatrank/tower.hpp"

#include <string>

#include "fermatrank/modchar.hpp"

namespace fermatrank {

FieldDegrees::FieldDegrees(Int k_degree, std::vector<Int> f_over_q)
    : k_degree_(std::move(k_degree)), f_over_q_(std::move(f_over_q)) {
  if (k_degree_ < 1) fail(ErrorCode::invalid_argument, "[K:Q] must be positive");
  if (f_over_q_.empty()) fail(ErrorCode::invalid_argument, "degree table is empty");
}

const Int& FieldDegrees::f_over_q(unsigned i) const {
  if (i >= f_over_q_.size())
    fail(ErrorCode::invalid_argument, "degree table does not cover level " + std::to_string(i));
  return f_over_q_[i];
}

Int FieldDegrees::f_over_k(unsigned i) const { return f_over_q(i) / k_degree_; }

Int fermat_genus(const Int& d) {
  if (d < 1) fail(ErrorCode::invalid_argument, "curve degree must be at least 1");
  return (d - 1) * (d - 2) / 2;
}

TowerLevel tower_level(const Int& p, unsigned n) {
  if (p < 3 || !is_prime(p))
    fail(ErrorCode::invalid_argument, "p must be an odd prime, got " + int_to_string(p));
  TowerLevel level;
  level.p = p;
  level.n = n;
  level.degree = pow_int(p, n);
  level.genus = fermat_genus(level.degree);
  level.dim_jacobian = level.genus;
  level.dim_new_part = n == 0 ? Int(0) : level.genus - fermat_genus(pow_int(p, n - 1));
  return level;
}

FieldDegrees field_degrees(const Int& p, unsigned n, const Int& k_degree,
                           bool linearly_disjoint, const std::map<unsigned, Int>& overrides) {
  if (p < 3 || !is_prime(p))
    fail(ErrorCode::invalid_argument, "p must be an odd prime, got " + int_to_string(p));
  if (k_degree < 1) fail(ErrorCode::invalid_argument, "[K:Q] must be positive");

  std::vector<Int> f_over_q(n + 1);
  const Int f_degree = k_degree * (p - 1);
  for (unsigned i = 0; i <= n; ++i) {
    if (auto it = overrides.find(i); it != overrides.end()) {
      f_over_q[i] = it->second;
    } else if (linearly_disjoint) {
      // F_0 = F; [F_i : F] = p^(i-1) for i >= 1 under maximal growth.
      f_over_q[i] = i == 0 ? f_degree : f_degree * pow_int(p, i - 1);
    } else {
      fail(ErrorCode::inconsistent_override,
           "without the linear-disjointness assumption every level needs an explicit "
           "degree; level " + std::to_string(i) + " is missing");
    }
  }

  for (unsigned i = 0; i <= n; ++i) {
    if (f_over_q[i] < 1)
      fail(ErrorCode::inconsistent_override,
           "degree at level " + std::to_string(i) + " must be positive");
    if (f_over_q[i] % k_degree != 0)
      fail(ErrorCode::inconsistent_override,
           "[K:Q] = " + int_to_string(k_degree) + " does not divide [F_" +
               std::to_string(i) + ":Q] = " + int_to_string(f_over_q[i]));
    if (i > 0) {
      if (f_over_q[i] < f_over_q[i - 1] || f_over_q[i] % f_over_q[i - 1] != 0)
        fail(ErrorCode::inconsistent_override,
             "degrees must be non-decreasing and divisible along the tower; levels " +
                 std::to_string(i - 1) + " and " + std::to_string(i) + " conflict");
      const Int step = f_over_q[i] / f_over_q[i - 1];
      if (step != 1 && step != p)
        fail(ErrorCode::inconsistent_override,
             "[F_" + std::to_string(i) + ":F_" + std::to_string(i - 1) + "] = " +
                 int_to_string(step) + " must divide p");
    }
  }
  return FieldDegrees(k_degree, std::move(f_over_q));
}

Rat rank_sum(const Int& p, unsigned n, const FieldDegrees& degrees) {
  if (degrees.max_level() < n)
    fail(ErrorCode::invalid_argument,
         "degree table covers levels up to " + std::to_string(degrees.max_level()) +
             ", need " + std::to_string(n));
  Rat sum = 0;
  for (unsigned i = 0; i <= n; ++i)
    sum += Rat(tower_level(p, i).dim_new_part, degrees.f_over_k(i));
  return sum;
}

Rat sum_growth_ratio(const Int& p, unsigned n, const FieldDegrees& degrees) {
  return rank_sum(p, n, degrees) / Rat(pow_int(p, n));
}

TowerTable build_tower_table(const Int& p, unsigned n_max, const FieldDegrees& degrees) {
  if (degrees.max_level() < n_max)
    fail(ErrorCode::invalid_argument, "degree table does not cover the requested levels");
  TowerTable table{{}, degrees, {}};
  Rat running = 0;
  for (unsigned i = 0; i <= n_max; ++i) {
    TowerLevel level = tower_level(p, i);
    running += Rat(level.dim_new_part, degrees.f_over_k(i));
    table.levels.push_back(std::move(level));
    table.partial_sums.push_back(running);
  }
  return table;
}

}  // namespace fermatrank
