#pragma once

// Irreducible representations of the semidirect product (Z/p^n Z)^2 x| H
// for abelian H, built orbit by orbit: each H-orbit of characters,
// together with a character psi of the orbit's stabilizer, induces one
// irreducible of dimension [H : stabilizer].  Only the bookkeeping the
// rank bounds consume is kept: dimensions, whether psi is trivial, and
// the resulting H-fixed subspace dimension.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "fermatrank/modchar.hpp"
#include "fermatrank/numeric.hpp"

namespace fermatrank {

// One irreducible, labeled by (orbit, psi).  psi is tracked only as an
// index among the stabilizer's characters, with index 0 the trivial one;
// no bound depends on more.
struct IrrepDatum {
  Orbit orbit;
  std::size_t psi_index = 0;
  bool psi_is_trivial = true;
  std::uint64_t dim = 1;  // [H : H_i] = orbit size
  int fixed_dim = 1;      // 1 iff psi trivial
};

struct SpectrumEntry {
  IrrepDatum irrep;
  Int multiplicity;  // >= 0
};

// A hypothetical G-representation as a multiset of irreducibles.
struct RepSpectrum {
  PrimePower level;
  GaloisAction action;
  std::vector<SpectrumEntry> constituents;
};

// All irreducibles of (Z/p^n Z)^2 x| H, sorted by orbit representative
// and then psi index.  Requires H abelian; matrix actions with
// non-commuting generators are rejected.
std::vector<IrrepDatum> enumerate_irreps(const GaloisAction& action,
                                         std::uint64_t budget = kDefaultEnumerationBudget);

// dim of the H-fixed subspace: 1 iff psi is trivial.
int fixed_space_dim(const IrrepDatum& irrep);

// The generic upper bound [H:H_i]^(-1) * dim on the fixed subspace; for
// irreps coming out of enumerate_irreps this is exactly 1.
Rat fixed_dim_bound(const IrrepDatum& irrep);

// Sum of multiplicity * dim over the constituents.
Int total_dim(const RepSpectrum& spectrum);

Int dim_squared_sum(const std::vector<IrrepDatum>& irreps);

// Partition of a spectrum by whether B = ker((Z/p^n)^2 -> (Z/p^(n-1))^2)
// acts trivially: first the B-invariant part, then the part on which B
// acts nontrivially (orbit representative of exact order p^n).
std::pair<RepSpectrum, RepSpectrum> split_by_B(const RepSpectrum& spectrum);

// |H|^(-1) * dim W' as an exact rational: the fixed-space bound for the
// part of a spectrum on which B acts nontrivially.
Rat new_part_fixed_bound(const Int& new_part_dim, const Int& h_order);

}  // namespace fermatrank
