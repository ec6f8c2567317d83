#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "fermatrank/modchar.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace fermatrank;

namespace {

std::vector<Character> all_characters(const PrimePower& level) {
  std::vector<Character> chars;
  for (Int a = 0; a < level.value(); ++a)
    for (Int b = 0; b < level.value(); ++b) chars.emplace_back(level, a, b);
  return chars;
}

}  // namespace

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(97));
  CHECK(is_prime(7919));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(-3));
  CHECK_FALSE(is_prime(91));       // 7 * 13
  CHECK_FALSE(is_prime(561));      // Carmichael
  CHECK_FALSE(is_prime(1105));     // Carmichael
  CHECK(is_prime(Int("1000000007")));
  CHECK_FALSE(is_prime(Int("1000000007") * Int("1000000009")));
}

TEST_CASE("prime power validation") {
  PrimePower q(3, 2);
  CHECK(q.p() == 3);
  CHECK(q.n() == 2);
  CHECK(q.value() == 9);
  CHECK(PrimePower(5, 0).value() == 1);
  CHECK(PrimePower(7, 3).value() == 343);
  CHECK_FAILS_WITH(PrimePower(2, 1), ErrorCode::invalid_argument);
  CHECK_FAILS_WITH(PrimePower(4, 1), ErrorCode::invalid_argument);
  CHECK_FAILS_WITH(PrimePower(9, 1), ErrorCode::invalid_argument);
  CHECK_FAILS_WITH(PrimePower(1, 1), ErrorCode::invalid_argument);
  CHECK_FAILS_WITH(PrimePower(-3, 1), ErrorCode::invalid_argument);
}

TEST_CASE("character reduction") {
  PrimePower q(3, 2);
  Character chi(q, 10, -1);
  CHECK(chi.a == 1);
  CHECK(chi.b == 8);
  CHECK_FALSE(chi.is_trivial());
  CHECK(Character(q, 9, 18).is_trivial());
  CHECK(Character(q, 2, 3) < Character(q, 3, 0));
  CHECK(Character(q, 2, 3) < Character(q, 2, 4));
}

TEST_CASE("p-adic valuation") {
  PrimePower q(3, 3);
  for (Int x = 0; x < q.value(); ++x) {
    unsigned expected = q.n();
    if (x != 0) {
      expected = 0;
      Int y = x;
      while (y % 3 == 0) {
        y /= 3;
        ++expected;
      }
    }
    CHECK(p_adic_valuation(x, q) == expected);
  }
  CHECK_FAILS_WITH(p_adic_valuation(Int(27), q), ErrorCode::invalid_argument);
  CHECK_FAILS_WITH(p_adic_valuation(Int(-1), q), ErrorCode::invalid_argument);
}

TEST_CASE("character order against brute force") {
  for (auto [p, n] : std::vector<std::pair<int, unsigned>>{
           {3, 0}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}}) {
    PrimePower q(p, n);
    for (const Character& chi : all_characters(q)) {
      Int expected(oracle::char_order_brute(q.value(), chi.a, chi.b));
      CHECK(char_exact_order(chi) == expected);
    }
  }
}

TEST_CASE("full units matches enumerated unit group") {
  for (auto [p, n] : std::vector<std::pair<int, unsigned>>{
           {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 2}, {11, 1}}) {
    PrimePower q(p, n);
    GaloisAction action = GaloisAction::full_units(q);
    std::vector<Int> expected = oracle::unit_group(q.value());
    REQUIRE(action.kind() == ActionKind::scalar);
    CHECK(action.scalar_elements() == expected);
    CHECK(action.group_order() == expected.size());
    CHECK(action.group_is_abelian());
  }
}

TEST_CASE("scalar subgroup closure matches oracle") {
  PrimePower q(3, 3);
  for (const Int& g : std::vector<Int>{2, 4, 8, 10, 26}) {
    GaloisAction action = GaloisAction::scalar(q, {g});
    CHECK(action.scalar_elements() == oracle::closure(q.value(), {g}));
  }
  GaloisAction two_gens = GaloisAction::scalar(q, {4, 26});
  CHECK(two_gens.scalar_elements() == oracle::closure(q.value(), {Int(4), Int(26)}));
}

TEST_CASE("scalar generators must be units") {
  PrimePower q(3, 2);
  CHECK_FAILS_WITH(GaloisAction::scalar(q, {Int(3)}), ErrorCode::invalid_argument);
  CHECK_FAILS_WITH(GaloisAction::scalar(q, {Int(0)}), ErrorCode::invalid_argument);
  CHECK(GaloisAction::scalar(q, {}).group_order() == 1);
  CHECK(GaloisAction::trivial(q).group_order() == 1);
}

TEST_CASE("group closure respects the budget") {
  PrimePower q(3, 3);
  CHECK_FAILS_WITH(GaloisAction::full_units(q, 5), ErrorCode::budget_exceeded);
  CHECK_FAILS_WITH(GaloisAction::scalar(q, {Int(2)}, 3), ErrorCode::budget_exceeded);
}

TEST_CASE("matrix closure and validation") {
  PrimePower q(3, 1);
  CHECK_FAILS_WITH(GaloisAction::matrix(q, {Mat2{1, 1, 1, 1}}),
                   ErrorCode::invalid_argument);  // det 0

  std::vector<Mat2> gens = {Mat2{0, 1, 2, 0}};
  GaloisAction rot = GaloisAction::matrix(q, gens);
  std::vector<oracle::Mat> orc_gens = {oracle::Mat{0, 1, 2, 0}};
  CHECK(rot.group_order() == oracle::matrix_closure(q.value(), orc_gens).size());
  CHECK(rot.group_is_abelian());

  // Upper and lower unipotent generators do not commute.
  GaloisAction nonab =
      GaloisAction::matrix(q, {Mat2{1, 1, 0, 1}, Mat2{1, 0, 1, 1}});
  CHECK_FALSE(nonab.group_is_abelian());
  std::vector<oracle::Mat> nonab_gens = {oracle::Mat{1, 1, 0, 1},
                                         oracle::Mat{1, 0, 1, 1}};
  CHECK(nonab.group_order() == oracle::matrix_closure(q.value(), nonab_gens).size());
}

TEST_CASE("matrix orbits match oracle") {
  PrimePower q(3, 2);
  std::vector<Mat2> gens = {Mat2{1, 1, 0, 1}};
  GaloisAction action = GaloisAction::matrix(q, gens);
  std::vector<oracle::Mat> group =
      oracle::matrix_closure(q.value(), {oracle::Mat{1, 1, 0, 1}});
  REQUIRE(action.group_order() == group.size());
  for (const Character& chi : all_characters(q)) {
    auto expected = oracle::matrix_orbit(q.value(), group, chi.a, chi.b);
    Orbit orbit = orbit_of(chi, action);
    CHECK(orbit.size == expected.size());
    CHECK(orbit.representative.a == expected.begin()->first);
    CHECK(orbit.representative.b == expected.begin()->second);
    CHECK(orbit.size * orbit.stabilizer_order == action.group_order());
  }
}

TEST_CASE("orbits of the full unit action match the oracle") {
  for (auto [p, n] : std::vector<std::pair<int, unsigned>>{{3, 1}, {3, 2}, {5, 1}, {5, 2}}) {
    PrimePower q(p, n);
    GaloisAction action = GaloisAction::full_units(q);
    std::vector<Int> units = oracle::unit_group(q.value());
    for (const Character& chi : all_characters(q)) {
      oracle::ScalarOrbit expected = oracle::scalar_orbit(q.value(), units, chi.a, chi.b);
      Orbit orbit = orbit_of(chi, action);
      CHECK(orbit.size == expected.members.size());
      CHECK(orbit.stabilizer_order == expected.stabilizer);
      CHECK(orbit.representative.a == expected.members.begin()->first);
      CHECK(orbit.representative.b == expected.members.begin()->second);
      CHECK(stabilizer_order(chi, action) == expected.stabilizer);
    }
  }
}

TEST_CASE("stabilizer closed form for the full unit action") {
  // The stabilizer of a character of exact order p^k is the set of units
  // congruent to 1 mod p^k: p^(n-k) of them for k >= 1, all units for k = 0.
  for (auto [p, n] : std::vector<std::pair<int, unsigned>>{{3, 2}, {3, 3}, {5, 2}}) {
    PrimePower q(p, n);
    GaloisAction action = GaloisAction::full_units(q);
    for (const Character& chi : all_characters(q)) {
      Int order = char_exact_order(chi);
      Int expected;
      if (order == 1) {
        expected = action.group_order();
      } else {
        expected = q.value() / order;  // p^(n-k)
      }
      CHECK(Int(stabilizer_order(chi, action)) == expected);
    }
  }
}

TEST_CASE("orbit representative independent of the starting member") {
  PrimePower q(5, 2);
  GaloisAction action = GaloisAction::full_units(q);
  Character chi(q, 5, 2);
  Orbit base = orbit_of(chi, action);
  for (std::size_t i = 0; i < action.group_order(); ++i) {
    Orbit moved = orbit_of(action.apply_element(i, chi), action);
    CHECK(moved.representative == base.representative);
    CHECK(moved.size == base.size);
    CHECK(moved.stabilizer_order == base.stabilizer_order);
  }
}

TEST_CASE("all_orbits partitions the characters") {
  for (auto [p, n] : std::vector<std::pair<int, unsigned>>{{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}}) {
    PrimePower q(p, n);
    GaloisAction action = GaloisAction::full_units(q);
    std::vector<Orbit> orbits = all_orbits(action);
    std::vector<Int> units = oracle::unit_group(q.value());

    Int total = 0;
    std::set<std::pair<Int, Int>> seen;
    for (const Orbit& orbit : orbits) {
      total += orbit.size;
      CHECK(orbit.size * orbit.stabilizer_order == action.group_order());
      oracle::ScalarOrbit expected = oracle::scalar_orbit(
          q.value(), units, orbit.representative.a, orbit.representative.b);
      CHECK(orbit.size == expected.members.size());
      for (const auto& member : expected.members)
        CHECK(seen.insert(member).second);  // orbits are pairwise disjoint
    }
    CHECK(total == q.value() * q.value());
    CHECK(Int(seen.size()) == q.value() * q.value());
    CHECK(std::is_sorted(orbits.begin(), orbits.end(),
                         [](const Orbit& x, const Orbit& y) {
                           return x.representative < y.representative;
                         }));
  }
}

TEST_CASE("all_orbits is deterministic") {
  PrimePower q(3, 2);
  GaloisAction action = GaloisAction::scalar(q, {Int(4)});
  std::vector<Orbit> first = all_orbits(action);
  std::vector<Orbit> second = all_orbits(action);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].representative == second[i].representative);
    CHECK(first[i].size == second[i].size);
    CHECK(first[i].stabilizer_order == second[i].stabilizer_order);
  }
}

TEST_CASE("all_orbits enforces the enumeration budget") {
  PrimePower q(3, 2);
  GaloisAction action = GaloisAction::full_units(q);
  CHECK_FAILS_WITH(all_orbits(action, 80), ErrorCode::budget_exceeded);
  CHECK(all_orbits(action, 81).size() > 0);
}

TEST_CASE("known orbit table for p=3 n=1") {
  GaloisAction action = GaloisAction::full_units(PrimePower(3, 1));
  std::vector<Orbit> orbits = all_orbits(action);
  REQUIRE(orbits.size() == 5);
  CHECK(orbits[0].size == 1);
  CHECK(orbits[0].stabilizer_order == 2);
  for (std::size_t i = 1; i < 5; ++i) {
    CHECK(orbits[i].size == 2);
    CHECK(orbits[i].stabilizer_order == 1);
  }
}

TEST_CASE("triviality on B and primitive counts") {
  PrimePower q(3, 2);
  Int primitive_brute = 0;
  for (const Character& chi : all_characters(q)) {
    bool primitive = char_exact_order(chi) == q.value();
    CHECK(is_trivial_on_B(chi) == !primitive);
    if (primitive) ++primitive_brute;
  }
  CHECK(primitive_character_count(q) == primitive_brute);
  CHECK(primitive_character_count(q) == 72);
  CHECK(primitive_character_count(PrimePower(3, 1)) == 8);
  CHECK(primitive_character_count(PrimePower(5, 2)) == 600);
  CHECK_FAILS_WITH(primitive_character_count(PrimePower(3, 0)),
                   ErrorCode::level_zero);
  CHECK_FAILS_WITH(is_trivial_on_B(Character(PrimePower(3, 0), 0, 0)),
                   ErrorCode::level_zero);
}

TEST_CASE("level zero has a single trivial character") {
  PrimePower q(3, 0);
  GaloisAction action = GaloisAction::full_units(q);
  CHECK(action.group_order() == 1);
  std::vector<Orbit> orbits = all_orbits(action);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].size == 1);
  CHECK(char_exact_order(Character(q, 0, 0)) == 1);
}
