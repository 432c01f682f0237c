#pragma once

// Surjective G-extension counts by Artin-Schreier conductor, by Moebius
// inversion over the subgroup lattice:
//   #Sur(H -> G)_n = sum_{H <= G} mu(H, G) |H| [X^n] F_H(X).

#include <cstddef>
#include <vector>

#include "ascgf/abelian_group.hpp"
#include "ascgf/series.hpp"

namespace ascgf {

/// All subgroups of one isomorphism type, with their summed weight sum mu(H, G) |H|.
struct FieldTerm {
  AbelianPGroup type;
  std::size_t subgroups = 0;
  BigInt weight;
  FactoredGF gf;
};

struct FieldCounts {
  /// Unnormalized counts of surjections, i.e. of field G-extensions.
  TruncatedSeries series;
  /// The series as sum weight * expand(gf); terms with zero weight are dropped.
  std::vector<FieldTerm> combination;
};

FieldCounts field_counts(const AbelianPGroup& g, const BigInt& q, unsigned order, const LatticeOptions& options = {});

TruncatedSeries field_count_series(const AbelianPGroup& g, const BigInt& q, unsigned order,
                                   const LatticeOptions& options = {});

}  // namespace ascgf
