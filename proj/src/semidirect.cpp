#include "fermatrank/semidirect.hpp"

#include <string>

namespace fermatrank {

std::vector<IrrepDatum> enumerate_irreps(const GaloisAction& action, std::uint64_t budget) {
  if (!action.group_is_abelian())
    fail(ErrorCode::non_abelian,
         "irreducible enumeration requires abelian H; the generators do not commute");
  std::vector<IrrepDatum> irreps;
  for (const Orbit& orbit : all_orbits(action, budget)) {
    // The stabilizer is abelian of order s, so it has exactly s
    // characters; index 0 denotes the trivial one.
    for (std::uint64_t psi = 0; psi < orbit.stabilizer_order; ++psi)
      irreps.push_back(IrrepDatum{orbit, static_cast<std::size_t>(psi), psi == 0,
                                  orbit.size, psi == 0 ? 1 : 0});
  }
  return irreps;
}

int fixed_space_dim(const IrrepDatum& irrep) { return irrep.psi_is_trivial ? 1 : 0; }

Rat fixed_dim_bound(const IrrepDatum& irrep) {
  const std::uint64_t index = irrep.orbit.size;  // [H : H_i]
  if (index == 0) fail(ErrorCode::invalid_argument, "orbit of size zero");
  return Rat(Int(irrep.dim), Int(index));
}

Int total_dim(const RepSpectrum& spectrum) {
  Int total = 0;
  for (const SpectrumEntry& entry : spectrum.constituents) {
    if (entry.multiplicity < 0)
      fail(ErrorCode::invalid_argument, "negative multiplicity in spectrum");
    total += entry.multiplicity * entry.irrep.dim;
  }
  return total;
}

Int dim_squared_sum(const std::vector<IrrepDatum>& irreps) {
  Int total = 0;
  for (const IrrepDatum& irrep : irreps) total += Int(irrep.dim) * Int(irrep.dim);
  return total;
}

std::pair<RepSpectrum, RepSpectrum> split_by_B(const RepSpectrum& spectrum) {
  if (spectrum.level.n() == 0)
    fail(ErrorCode::level_zero, "B is undefined at level n = 0");
  RepSpectrum b_invariant{spectrum.level, spectrum.action, {}};
  RepSpectrum new_part{spectrum.level, spectrum.action, {}};
  for (const SpectrumEntry& entry : spectrum.constituents) {
    if (entry.irrep.orbit.representative.level != spectrum.level)
      fail(ErrorCode::invalid_argument, "constituent level does not match spectrum level");
    if (entry.multiplicity < 0)
      fail(ErrorCode::invalid_argument, "negative multiplicity in spectrum");
    // B acts nontrivially exactly on the constituents whose orbit consists
    // of characters of exact order p^n.
    if (is_trivial_on_B(entry.irrep.orbit.representative))
      b_invariant.constituents.push_back(entry);
    else
      new_part.constituents.push_back(entry);
  }
  return {std::move(b_invariant), std::move(new_part)};
}

Rat new_part_fixed_bound(const Int& new_part_dim, const Int& h_order) {
  if (h_order < 1) fail(ErrorCode::invalid_argument, "group order must be positive");
  if (new_part_dim < 0) fail(ErrorCode::invalid_argument, "dimension must be non-negative");
  return Rat(new_part_dim, h_order);
}

}  // namespace fermatrank
