#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "fermatrank/semidirect.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace fermatrank;

namespace {

// Library fixed dims for one orbit, ordered by psi index, against the
// character-averaging oracle.
void check_orbit_against_oracle(const GaloisAction& action,
                                const std::vector<IrrepDatum>& irreps,
                                const Orbit& orbit) {
  std::vector<Int> expected = oracle::induced_fixed_dims(
      action.level().value(), action.scalar_elements(), orbit.representative.a,
      orbit.representative.b);
  std::vector<Int> got;
  for (const IrrepDatum& irrep : irreps) {
    if (!(irrep.orbit.representative == orbit.representative)) continue;
    REQUIRE(irrep.psi_index == got.size());  // contiguous, ordered
    got.push_back(fixed_space_dim(irrep));
    CHECK(irrep.dim == orbit.size);
  }
  REQUIRE(got.size() == expected.size());
  // The trivial psi comes first on both sides; the rest is an unordered
  // multiset.
  CHECK(got.front() == expected.front());
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);
}

void check_action_against_oracle(const GaloisAction& action) {
  std::vector<IrrepDatum> irreps = enumerate_irreps(action);
  for (const Orbit& orbit : all_orbits(action))
    check_orbit_against_oracle(action, irreps, orbit);
}

}  // namespace

TEST_CASE("irrep structure for p=3 n=1 full units") {
  GaloisAction action = GaloisAction::full_units(PrimePower(3, 1));
  std::vector<IrrepDatum> irreps = enumerate_irreps(action);
  // Trivial orbit contributes |H| = 2 one-dimensional irreps; the four
  // orbits of size 2 contribute one 2-dimensional irrep each.
  REQUIRE(irreps.size() == 6);
  CHECK(irreps[0].dim == 1);
  CHECK(irreps[0].psi_is_trivial);
  CHECK(irreps[0].fixed_dim == 1);
  CHECK(irreps[1].dim == 1);
  CHECK_FALSE(irreps[1].psi_is_trivial);
  CHECK(irreps[1].fixed_dim == 0);
  for (std::size_t i = 2; i < 6; ++i) {
    CHECK(irreps[i].dim == 2);
    CHECK(irreps[i].psi_is_trivial);
    CHECK(irreps[i].fixed_dim == 1);
  }
  CHECK(dim_squared_sum(irreps) == 9 * 2);
}

TEST_CASE("sum of squared dimensions equals the group order") {
  for (auto [p, n] : std::vector<std::pair<int, unsigned>>{
           {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {11, 1}}) {
    PrimePower q(p, n);
    GaloisAction action = GaloisAction::full_units(q);
    Int theta = q.value() * q.value();
    CHECK(dim_squared_sum(enumerate_irreps(action)) ==
          theta * Int(action.group_order()));
  }
  // Proper scalar subgroups as well.
  PrimePower q(3, 3);
  for (const Int& g : std::vector<Int>{4, 8, 26}) {
    GaloisAction action = GaloisAction::scalar(q, {g});
    CHECK(dim_squared_sum(enumerate_irreps(action)) ==
          q.value() * q.value() * Int(action.group_order()));
  }
  GaloisAction trivial = GaloisAction::trivial(q);
  CHECK(dim_squared_sum(enumerate_irreps(trivial)) == q.value() * q.value());
}

TEST_CASE("fixed dimensions match the character-averaging oracle") {
  for (auto [p, n] : std::vector<std::pair<int, unsigned>>{
           {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {7, 2}}) {
    check_action_against_oracle(GaloisAction::full_units(PrimePower(p, n)));
  }
  check_action_against_oracle(GaloisAction::scalar(PrimePower(3, 3), {Int(4)}));
  check_action_against_oracle(GaloisAction::scalar(PrimePower(3, 3), {Int(26)}));
  check_action_against_oracle(GaloisAction::scalar(PrimePower(5, 2), {Int(7)}));
  check_action_against_oracle(GaloisAction::scalar(PrimePower(5, 2), {Int(24)}));
  check_action_against_oracle(GaloisAction::trivial(PrimePower(3, 2)));
}

TEST_CASE("irrep count is the sum of stabilizer orders") {
  GaloisAction action = GaloisAction::full_units(PrimePower(5, 2));
  std::vector<Orbit> orbits = all_orbits(action);
  std::uint64_t expected = 0;
  for (const Orbit& orbit : orbits) expected += orbit.stabilizer_order;
  CHECK(enumerate_irreps(action).size() == expected);
}

TEST_CASE("primitive orbits under full units have trivial stabilizer") {
  for (auto [p, n] : std::vector<std::pair<int, unsigned>>{{3, 2}, {3, 3}, {5, 2}}) {
    PrimePower q(p, n);
    GaloisAction action = GaloisAction::full_units(q);
    for (const Orbit& orbit : all_orbits(action)) {
      if (char_exact_order(orbit.representative) != q.value()) continue;
      CHECK(orbit.stabilizer_order == 1);
      CHECK(Int(orbit.size) == Int(action.group_order()));
    }
  }
}

TEST_CASE("non-abelian actions are rejected") {
  GaloisAction nonab = GaloisAction::matrix(
      PrimePower(3, 1), {Mat2{1, 1, 0, 1}, Mat2{1, 0, 1, 1}});
  CHECK_FAILS_WITH(enumerate_irreps(nonab), ErrorCode::non_abelian);
}

TEST_CASE("abelian matrix actions are accepted") {
  GaloisAction diag = GaloisAction::matrix(PrimePower(3, 1), {Mat2{2, 0, 0, 1}});
  std::vector<IrrepDatum> irreps = enumerate_irreps(diag);
  CHECK(dim_squared_sum(irreps) == Int(9) * Int(diag.group_order()));
}

TEST_CASE("fixed dim bound on synthetic data") {
  GaloisAction action = GaloisAction::full_units(PrimePower(3, 1));
  IrrepDatum irrep = enumerate_irreps(action).back();
  CHECK(fixed_dim_bound(irrep) == 1);  // dim equals orbit size
  IrrepDatum synthetic = irrep;
  synthetic.dim = 1;  // proper subrepresentation bookkeeping
  CHECK(fixed_dim_bound(synthetic) == Rat(1, 2));
}

TEST_CASE("regular spectrum splits by B with the right dimensions") {
  PrimePower q(3, 2);
  GaloisAction action = GaloisAction::full_units(q);
  RepSpectrum spectrum{q, action, {}};
  for (const IrrepDatum& irrep : enumerate_irreps(action))
    spectrum.constituents.push_back(SpectrumEntry{irrep, Int(irrep.dim)});
  CHECK(total_dim(spectrum) == q.value() * q.value() * Int(action.group_order()));

  auto [b_invariant, new_part] = split_by_B(spectrum);
  for (const SpectrumEntry& entry : b_invariant.constituents)
    CHECK(is_trivial_on_B(entry.irrep.orbit.representative));
  for (const SpectrumEntry& entry : new_part.constituents)
    CHECK_FALSE(is_trivial_on_B(entry.irrep.orbit.representative));
  CHECK(b_invariant.constituents.size() + new_part.constituents.size() ==
        spectrum.constituents.size());
  // Characters of order < p^n contribute the regular representation of
  // the level-(n-1) quotient: p^(2(n-1)) * |H| dimensions.
  Int lower = q.p() * q.p();  // p^(2(n-1)) for n = 2
  CHECK(total_dim(b_invariant) == lower * Int(action.group_order()));
  CHECK(total_dim(new_part) ==
        (q.value() * q.value() - lower) * Int(action.group_order()));
}

TEST_CASE("split_by_B rejects level zero") {
  PrimePower q(3, 0);
  GaloisAction action = GaloisAction::trivial(q);
  RepSpectrum spectrum{q, action, {}};
  for (const IrrepDatum& irrep : enumerate_irreps(action))
    spectrum.constituents.push_back(SpectrumEntry{irrep, Int(1)});
  CHECK_FAILS_WITH(split_by_B(spectrum), ErrorCode::level_zero);
}

TEST_CASE("new part fixed bound validation") {
  CHECK(new_part_fixed_bound(Int(12), Int(8)) == Rat(3, 2));
  CHECK(new_part_fixed_bound(Int(0), Int(2)) == 0);
  CHECK_FAILS_WITH(new_part_fixed_bound(Int(4), Int(0)), ErrorCode::invalid_argument);
  CHECK_FAILS_WITH(new_part_fixed_bound(Int(-1), Int(2)), ErrorCode::invalid_argument);
}

TEST_CASE("random spectra satisfy the termwise fixed bound") {
  struct Pool {
    PrimePower level;
    GaloisAction action;
    std::vector<IrrepDatum> irreps;
  };
  std::vector<Pool> pools;
  for (auto [p, n] : std::vector<std::pair<int, unsigned>>{{3, 1}, {3, 2}, {5, 1}}) {
    PrimePower q(p, n);
    GaloisAction action = GaloisAction::full_units(q);
    pools.push_back(Pool{q, action, enumerate_irreps(action)});
  }
  {
    PrimePower q(3, 2);
    GaloisAction action = GaloisAction::scalar(q, {Int(4)});
    pools.push_back(Pool{q, action, enumerate_irreps(action)});
  }

  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> mult_dist(0, 20);
  for (int draw = 0; draw < 1000; ++draw) {
    const Pool& pool = pools[rng() % pools.size()];
    RepSpectrum spectrum{pool.level, pool.action, {}};
    Int actual_fixed = 0;
    for (const IrrepDatum& irrep : pool.irreps) {
      if (rng() % 2 == 0) continue;
      Int mult(mult_dist(rng));
      spectrum.constituents.push_back(SpectrumEntry{irrep, mult});
      // Termwise: each constituent's fixed dim is capped by the generic
      // orbit-size bound.
      CHECK(Rat(fixed_space_dim(irrep)) <= fixed_dim_bound(irrep));
      actual_fixed += mult * Int(fixed_space_dim(irrep));
    }
    // Aggregate form of the same inequality.
    Rat aggregate = 0;
    for (const SpectrumEntry& entry : spectrum.constituents)
      aggregate += Rat(entry.multiplicity) * fixed_dim_bound(entry.irrep);
    CHECK(Rat(actual_fixed) <= aggregate);

    if (pool.level.n() >= 1) {
      auto [b_invariant, new_part] = split_by_B(spectrum);
      Int new_fixed = 0;
      for (const SpectrumEntry& entry : new_part.constituents)
        new_fixed += entry.multiplicity * Int(fixed_space_dim(entry.irrep));
      Rat cap = new_part_fixed_bound(total_dim(new_part),
                                     Int(pool.action.group_order()));
      CHECK(Rat(new_fixed) <= cap);
    }
  }
}
