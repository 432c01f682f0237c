#include "ascgf/field_counts.hpp"

#include <map>
#include <stdexcept>

#include "ascgf/conductor.hpp"

namespace ascgf {

FieldCounts field_counts(const AbelianPGroup& g, const BigInt& q, unsigned order, const LatticeOptions& options) {
  const SubgroupLattice lattice = subgroup_lattice(g, options);
  std::map<std::string, FieldTerm> by_type;
  std::map<std::string, TruncatedSeries> expansions;
  TruncatedSeries total(order);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Subgroup& h = lattice.subgroup(i);
    const long mu = lattice.moebius(i);
    const std::string key = h.type.spec();
    auto it = by_type.find(key);
    if (it == by_type.end()) {
      const FactoredGF gf = global_asc_gf(h.type, q);
      it = by_type.emplace(key, FieldTerm{h.type, 0, 0, gf}).first;
      expansions.emplace(key, gf.expand(order));
    }
    ++it->second.subgroups;
    if (mu == 0) continue;
    const BigInt w = BigInt(mu) * BigInt(static_cast<unsigned long>(h.order));
    it->second.weight += w;
    total += expansions.at(key) * Rational(w);
  }
  total.integer_coefficients();  // throws on a fractional count

  FieldCounts result{std::move(total), {}};
  for (auto& [key, term] : by_type) {
    if (term.weight != 0) result.combination.push_back(std::move(term));
  }
  return result;
}

TruncatedSeries field_count_series(const AbelianPGroup& g, const BigInt& q, unsigned order,
                                   const LatticeOptions& options) {
  return field_counts(g, q, order, options).series;
}

}  // namespace ascgf
