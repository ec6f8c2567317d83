#include "fermatrank/bounds.hpp"

#include <algorithm>
#include <string>

#include "fermatrank/errors.hpp"

namespace fermatrank {

namespace {

void require_mu(bool asserted) {
  if (!asserted)
    fail(ErrorCode::mu_hypothesis_missing,
         "the mu = 0 hypothesis must be asserted for cyclotomic-tower bounds");
}

void require_triviality(bool asserted) {
  if (!asserted)
    fail(ErrorCode::hypothesis_missing,
         "the trivial-action hypothesis on the base homology mod p must be asserted");
}

void check_h1(const Int& h1) {
  if (h1 < 0) fail(ErrorCode::invalid_argument, "h1 must be non-negative");
}

}  // namespace

Int FiltrationData::total_dim() const {
  Int total = 0;
  for (const Int& r : ranks) {
    if (r < 0) fail(ErrorCode::invalid_argument, "filtration ranks must be non-negative");
    total += r;
  }
  return total;
}

Int filtration_h1_bound(const FiltrationData& filtration, const Int& h1,
                        std::size_t start_index) {
  check_h1(h1);
  if (start_index > filtration.ranks.size())
    fail(ErrorCode::invalid_argument,
         "start index " + std::to_string(start_index) + " exceeds filtration length " +
             std::to_string(filtration.ranks.size()));
  Int tail = 0;
  for (std::size_t j = start_index; j < filtration.ranks.size(); ++j) {
    if (filtration.ranks[j] < 0)
      fail(ErrorCode::invalid_argument, "filtration ranks must be non-negative");
    tail += filtration.ranks[j];
  }
  return tail * h1;
}

Int subquotient_h1_bound(const Int& dim_v, const Int& h1) {
  check_h1(h1);
  if (dim_v < 0) fail(ErrorCode::invalid_argument, "dim V must be non-negative");
  return dim_v * h1;
}

Int theorem_main_bound(const Int& dim_a, const Int& h1, bool triviality_asserted) {
  require_triviality(triviality_asserted);
  check_h1(h1);
  if (dim_a < 1) fail(ErrorCode::invalid_argument, "dim A must be positive");
  return 2 * h1 * dim_a;
}

Rat theorem_main_bound(const Int& dim_a, const Rat& h1, bool triviality_asserted) {
  require_triviality(triviality_asserted);
  if (h1 < 0) fail(ErrorCode::invalid_argument, "h1 must be non-negative");
  if (dim_a < 1) fail(ErrorCode::invalid_argument, "dim A must be positive");
  return Rat(2) * h1 * Rat(dim_a);
}

Int h1_level_from_infinity(const Int& dim_infinity_fixed) {
  if (dim_infinity_fixed < 0)
    fail(ErrorCode::invalid_argument, "fixed-part dimension must be non-negative");
  return 1 + dim_infinity_fixed;
}

Rat iwasawa_h1_bound(const CohomParams& params, const Int& fn_degree_over_q) {
  require_mu(params.mu_zero_asserted);
  if (params.iwasawa_c < 0) fail(ErrorCode::invalid_argument, "C must be non-negative");
  if (fn_degree_over_q < 1)
    fail(ErrorCode::invalid_argument, "[F_n:Q] must be positive");
  return (Rat(fn_degree_over_q) + params.iwasawa_c) / 2;
}

Rat prop_fnrank_bound(const Int& dim_a, const Int& fn_degree_over_q, const Rat& c,
                      bool mu_zero_asserted) {
  require_mu(mu_zero_asserted);
  if (dim_a < 1) fail(ErrorCode::invalid_argument, "dim A must be positive");
  if (c < 0) fail(ErrorCode::invalid_argument, "C must be non-negative");
  if (fn_degree_over_q < 1)
    fail(ErrorCode::invalid_argument, "[F_n:Q] must be positive");
  return Rat(dim_a) * (Rat(fn_degree_over_q) + c);
}

Rat fermat_rank_bound_exact(const Int& p, unsigned n, const FieldDegrees& degrees,
                            const Rat& c, bool mu_zero_asserted) {
  require_mu(mu_zero_asserted);
  if (c < 0) fail(ErrorCode::invalid_argument, "C must be non-negative");
  const Rat s_n = rank_sum(p, n, degrees);
  return Rat(degrees.k_degree() * tower_level(p, n).dim_jacobian) + c * s_n;
}

AsymptoticBound fermat_rank_bound_asymptotic(const Int& p, unsigned n_max,
                                             const FieldDegrees& degrees, const Rat& c) {
  if (n_max < 1) fail(ErrorCode::invalid_argument, "n_max must be at least 1");
  if (c < 0) fail(ErrorCode::invalid_argument, "C must be non-negative");
  Rat max_ratio = 0;
  for (unsigned n = 1; n <= n_max; ++n)
    max_ratio = std::max(max_ratio, sum_growth_ratio(p, n, degrees));
  AsymptoticBound result;
  result.c_prime = c * max_ratio;
  for (unsigned n = 0; n <= n_max; ++n)
    result.per_level.push_back(
        Rat(degrees.k_degree() * tower_level(p, n).dim_jacobian) +
        result.c_prime * Rat(pow_int(p, n)));
  return result;
}

bool chabauty_check(const Rat& rank_bound, const Int& dim_j) {
  if (dim_j < 1) fail(ErrorCode::invalid_argument, "dim J must be positive");
  return rank_bound < Rat(dim_j);
}

const char* bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::theorem_main: return "theorem-main";
    case BoundKind::prop_fnrank: return "prop-fnrank";
    case BoundKind::fermat_exact: return "fermat-exact";
    case BoundKind::fermat_asymptotic: return "fermat-asymptotic";
  }
  return "unknown";
}

BoundReport assemble_bound_report(const Int& p, unsigned n_max, const FieldDegrees& degrees,
                                  const Rat& c, const Int& h1_base, bool mu_zero_asserted,
                                  bool triviality_asserted) {
  require_triviality(triviality_asserted);
  require_mu(mu_zero_asserted);
  if (n_max < 1) fail(ErrorCode::invalid_argument, "n_max must be at least 1");

  BoundReport report;
  report.p = p;
  report.n_max = n_max;
  report.k_degree = degrees.k_degree();
  report.c = c;
  report.h1_base = h1_base;
  report.mu_zero_asserted = mu_zero_asserted;
  report.triviality_asserted = triviality_asserted;

  const AsymptoticBound asym = fermat_rank_bound_asymptotic(p, n_max, degrees, c);
  report.c_prime = asym.c_prime;
  for (unsigned n = 0; n <= n_max; ++n) {
    LevelBound level;
    level.n = n;
    level.p_n = pow_int(p, n);
    level.dim_j = tower_level(p, n).dim_jacobian;
    level.fn_degree_over_q = degrees.f_over_q(n);
    level.s_n = rank_sum(p, n, degrees);
    level.exact_bound = fermat_rank_bound_exact(p, n, degrees, c, mu_zero_asserted);
    level.asymptotic_bound = asym.per_level[n];
    level.chabauty_exact =
        level.dim_j >= 1 && chabauty_check(level.exact_bound, level.dim_j);
    report.levels.push_back(std::move(level));
  }
  return report;
}

}  // namespace fermatrank
