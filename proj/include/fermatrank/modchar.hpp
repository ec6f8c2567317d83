#pragma once

// Exact arithmetic on (Z/p^n Z)^2, its character lattice, and Galois-type
// actions on that lattice.
//
// Conventions, fixed once for the whole library:
//  * A character is a residue pair (a, b); it sends (s, t) to the class of
//    a*s + b*t mod p^n.
//  * A scalar action element u (a unit mod p^n) sends (a, b) to (ua, ub).
//  * A matrix action element M (2x2, invertible mod p^n) sends the row
//    vector (a, b) to (a, b) * M.
// Orbit and stabilizer structure does not depend on whether the action is
// written on the left or the right, so the right-multiplication form is
// used for both kinds.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "fermatrank/errors.hpp"
#include "fermatrank/numeric.hpp"

namespace fermatrank {

// Cap on the number of enumerated objects (characters in all_orbits,
// elements in group closure).  Callers above the cap get
// ErrorCode::budget_exceeded and are expected to switch to closed forms.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

// Deterministic Miller-Rabin, exact for anything a caller can reasonably
// type (p < 3.3e24).
bool is_prime(const Int& value);

// p^n for an odd prime p and level n >= 0.  Immutable; value cached.
class PrimePower {
 public:
  PrimePower(Int p, unsigned n);

  const Int& p() const noexcept { return p_; }
  unsigned n() const noexcept { return n_; }
  const Int& value() const noexcept { return value_; }

  friend bool operator==(const PrimePower& x, const PrimePower& y) {
    return x.p_ == y.p_ && x.n_ == y.n_;
  }
  friend bool operator!=(const PrimePower& x, const PrimePower& y) {
    return !(x == y);
  }

 private:
  Int p_;
  unsigned n_;
  Int value_;
};

// A character of (Z/p^n Z)^2 as a residue pair, reduced to [0, p^n).
struct Character {
  PrimePower level;
  Int a;
  Int b;

  Character(PrimePower lvl, Int a_in, Int b_in);

  bool is_trivial() const { return a == 0 && b == 0; }

  friend bool operator==(const Character& x, const Character& y) {
    return x.level == y.level && x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const Character& x, const Character& y) {
    return !(x == y);
  }
  // (a, b) lexicographic; used for orbit representatives.
  friend bool operator<(const Character& x, const Character& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
};

// 2x2 matrix over Z/p^n Z, row-major.
struct Mat2 {
  Int a, b, c, d;

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator<(const Mat2& x, const Mat2& y);
};

enum class ActionKind { scalar, matrix };

// A finitely generated group of symmetries of the character lattice:
// either a subgroup of the units (Z/p^n Z)^* acting by scalars, or a
// group of invertible 2x2 matrices mod p^n.  The full element list is
// enumerated at construction (subject to the budget), sorted, and shared
// immutably, so copies are cheap and thread-safe.
class GaloisAction {
 public:
  static GaloisAction scalar(const PrimePower& level,
                             std::vector<Int> unit_generators,
                             std::uint64_t budget = kDefaultEnumerationBudget);

  // The full unit group (Z/p^n Z)^*, generated by a primitive root.
  static GaloisAction full_units(const PrimePower& level,
                                 std::uint64_t budget = kDefaultEnumerationBudget);

  static GaloisAction trivial(const PrimePower& level);

  static GaloisAction matrix(const PrimePower& level,
                             std::vector<Mat2> generators,
                             std::uint64_t budget = kDefaultEnumerationBudget);

  const PrimePower& level() const noexcept;
  ActionKind kind() const noexcept;
  std::uint64_t group_order() const noexcept;
  bool group_is_abelian() const noexcept;

  // Generators as supplied (reduced mod p^n); echoed in reports.
  const std::vector<Int>& scalar_generators() const;
  const std::vector<Mat2>& matrix_generators() const;

  // All group elements, sorted ascending.  Scalar accessor valid only for
  // scalar kind, matrix accessor only for matrix kind.
  const std::vector<Int>& scalar_elements() const;
  const std::vector<Mat2>& matrix_elements() const;

  Character apply_element(std::size_t element_index, const Character& chi) const;

  // Image of chi under each generator in turn; the orbit closure step.
  void apply_generators(const Character& chi, std::vector<Character>& out) const;

 private:
  struct Data;
  explicit GaloisAction(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> data_;
};

// One orbit of the action on characters.
struct Orbit {
  Character representative;  // lexicographically minimal member
  std::uint64_t size = 0;
  std::uint64_t stabilizer_order = 0;
};

// Largest k <= n with p^k | x; by convention v(0) = n.
unsigned p_adic_valuation(const Int& x, const PrimePower& level);

// Order of chi in the dual group: p^n / p^min(v(a), v(b)).
Int char_exact_order(const Character& chi);

// |{h in H : h.chi = chi}| by direct count over the element list.
std::uint64_t stabilizer_order(const Character& chi, const GaloisAction& action);

// The orbit through chi; independent of which member is supplied.
Orbit orbit_of(const Character& chi, const GaloisAction& action);

// Complete orbit decomposition of all p^(2n) characters, sorted by
// representative.  Throws budget_exceeded when p^(2n) > budget.
std::vector<Orbit> all_orbits(const GaloisAction& action,
                              std::uint64_t budget = kDefaultEnumerationBudget);

// True iff chi restricts trivially to B = ker((Z/p^n)^2 -> (Z/p^(n-1))^2),
// i.e. iff chi has exact order < p^n.  Requires n >= 1.
bool is_trivial_on_B(const Character& chi);

// Number of characters of exact order p^n: p^(2n) - p^(2n-2).  n >= 1.
Int primitive_character_count(const PrimePower& level);

}  // namespace fermatrank
