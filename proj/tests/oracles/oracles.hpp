#pragma once

// Test-side oracles.  Everything here is an independent reimplementation
// used only to cross-check the library: brute-force enumeration instead of
// closed forms, lattice counts instead of genus formulas, and exact
// cyclotomic arithmetic instead of representation-theoretic shortcuts.
// Favor the obviously-correct path over the fast one.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "fermatrank/numeric.hpp"

namespace oracle {

using fermatrank::Int;
using fermatrank::Rat;

// ---- dense polynomials over Z, coefficient of x^k at index k --------------

struct Poly {
  std::vector<Int> c;

  void trim();
  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const;
  static Poly x_pow(std::size_t k);
  bool operator==(const Poly& other) const;
};

Poly add(const Poly& x, const Poly& y);
Poly sub(const Poly& x, const Poly& y);
Poly mul(const Poly& x, const Poly& y);
// Long division by a monic divisor; aborts if the remainder is non-zero.
Poly divide_exact(const Poly& numerator, const Poly& monic_divisor);
Poly remainder_by_monic(const Poly& value, const Poly& monic_divisor);

// Phi_m via recursive exact division of x^m - 1 by the proper-divisor
// cyclotomics; memoized.
Poly cyclotomic(std::uint64_t m);

// Z[x]/Phi_m(x); elements are remainders of degree < deg Phi_m.
class CycRing {
 public:
  explicit CycRing(std::uint64_t m);

  std::uint64_t order() const { return m_; }
  Poly zero() const { return Poly{}; }
  Poly one() const;
  Poly zeta_pow(std::uint64_t k) const;
  Poly add(const Poly& x, const Poly& y) const;
  Poly mul(const Poly& x, const Poly& y) const;
  Poly conj(const Poly& x) const;  // zeta -> zeta^(m-1)
  // True when the element is a rational integer; writes it if asked.
  bool is_integer(const Poly& x, Int* value = nullptr) const;

 private:
  std::uint64_t m_;
  Poly phi_;
};

// ---- multiplicative groups mod m, by enumeration --------------------------

std::vector<Int> unit_group(const Int& modulus);  // sorted, gcd(u, m) = 1
std::vector<Int> closure(const Int& modulus, const std::vector<Int>& generators);
std::uint64_t element_order(const Int& modulus, const Int& u);
// Element of order |group|; aborts if the group is not cyclic.
Int find_generator(const Int& modulus, const std::vector<Int>& group);

// ---- characters of (Z/m)^2 ------------------------------------------------

std::uint64_t char_order_brute(const Int& modulus, const Int& a, const Int& b);

struct ScalarOrbit {
  std::set<std::pair<Int, Int>> members;
  std::uint64_t stabilizer = 0;
};
ScalarOrbit scalar_orbit(const Int& modulus, const std::vector<Int>& group,
                         const Int& a, const Int& b);

struct Mat {
  Int a, b, c, d;
  bool operator<(const Mat& other) const;
};
std::vector<Mat> matrix_closure(const Int& modulus, const std::vector<Mat>& generators);
// Row-vector action (a, b) * M, matching the dual action on characters.
std::set<std::pair<Int, Int>> matrix_orbit(const Int& modulus,
                                           const std::vector<Mat>& group,
                                           const Int& a, const Int& b);

// Fixed-space dimensions of the irreducibles attached to the orbit of
// (a, b) under a cyclic scalar group H: for each character psi of the
// stabilizer, averages the induced character over H in Z[x]/Phi_s and
// returns the resulting dimensions ordered with the trivial psi first.
// Aborts unless every average is a non-negative integer.
std::vector<Int> induced_fixed_dims(const Int& modulus,
                                    const std::vector<Int>& group,
                                    const Int& a, const Int& b);

// ---- lattice counts -------------------------------------------------------

// Interior lattice points of the triangle {x >= 1, y >= 1, x + y <= d - 1},
// which is the genus of a smooth plane curve of degree d.
Int genus_lattice(const Int& d);

}  // namespace oracle
