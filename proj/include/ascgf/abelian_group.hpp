#pragma once

// Finite abelian p-groups prod_e C_{p^e}^{m_e}, their counting invariants,
// element-level models and subgroup lattices.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ascgf/bigint.hpp"

namespace ascgf {

/// A finite abelian p-group given by cyclic-factor multiplicities:
/// multiplicities()[e-1] is the number of C_{p^e} factors.
class AbelianPGroup {
 public:
  /// Throws std::invalid_argument if p is not prime. Trailing zero
  /// multiplicities are dropped.
  AbelianPGroup(std::uint64_t p, std::vector<unsigned> multiplicities);

  static AbelianPGroup trivial(std::uint64_t p) { return {p, {}}; }
  static AbelianPGroup cyclic(std::uint64_t p, unsigned e);
  /// C_{p^e}^r.
  static AbelianPGroup cyclic_power(std::uint64_t p, unsigned e, unsigned r);
  /// Builds the group from a list of cyclic factor exponents (Z/p^{a_j}).
  static AbelianPGroup from_factor_exponents(std::uint64_t p, const std::vector<unsigned>& exponents);

  /// Parses "p=3;m=1,0,2". The multiplicity list may be empty.
  static AbelianPGroup parse(std::string_view spec);

  std::uint64_t prime() const { return p_; }
  const std::vector<unsigned>& multiplicities() const { return m_; }
  unsigned multiplicity(unsigned e) const;

  /// t with exponent p^t; 0 for the trivial group.
  unsigned exponent_log() const { return static_cast<unsigned>(m_.size()); }
  /// sum_e e*m_e, so |G| = p^{order_log}.
  unsigned order_log() const;
  /// dim_{F_p} G[p] = sum_e m_e.
  unsigned rank() const;
  BigInt order() const;
  bool is_trivial() const { return m_.empty(); }
  bool is_cyclic() const { return rank() <= 1; }

  /// Cyclic factor exponents in non-decreasing order, e.g. {1, 2} for C_p x C_{p^2}.
  std::vector<unsigned> factor_exponents() const;

  /// Canonical spec string, "p=3;m=1,0,2".
  std::string spec() const;
  /// Human-readable name such as "C3 x C9^2" or "1".
  std::string name() const;

  bool operator==(const AbelianPGroup&) const = default;

 private:
  std::uint64_t p_;
  std::vector<unsigned> m_;
};

struct InvariantSequence {
  /// c_0 .. c_{t+1}.
  std::vector<Rational> c;
  /// r_1 .. r_t.
  std::vector<unsigned> r;
  /// Innermost local pole exponent, equal to c_{t+1}.
  Rational a;
  /// Innermost global pole exponent 1 + dim G[p].
  unsigned a_prime = 1;

  /// c_i for any i >= 0; the sequence is constant past t+1.
  const Rational& c_at(std::size_t i) const { return i < c.size() ? c[i] : c.back(); }
};

InvariantSequence invariant_sequence(const AbelianPGroup& g);

/// |G[p^r]| = p^{sum_e m_e min(e, r)}.
BigInt torsion_size(const AbelianPGroup& g, unsigned r);

/// tau(k) = sum_e m_e (k - floor(k / p^e)); Q^tau(k) maps U^1 -> G have last jump <= k.
std::uint64_t tau(const AbelianPGroup& g, std::uint64_t k);

/// A finite abelian p-group written as a product of cyclic factors Z/p^{a_j}.
struct CyclicFactors {
  std::uint64_t p = 2;
  std::vector<unsigned> exponents;
};

/// |Hom(A, G)| = prod_j |G[p^{a_j}]|. Throws std::invalid_argument on a prime mismatch.
BigInt hom_count(const CyclicFactors& a, const AbelianPGroup& g);

/// Explicit element model: elements are indexed 0..size()-1 in mixed radix over
/// the cyclic factors (smallest factors first); index 0 is the identity.
class ElementTable {
 public:
  ElementTable(const AbelianPGroup& g, std::uint64_t max_elements);

  std::size_t size() const { return size_; }
  std::size_t rank() const { return moduli_.size(); }
  const std::vector<std::uint64_t>& moduli() const { return moduli_; }

  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t negate(std::size_t a) const;
  /// Coordinate j of element a.
  std::uint64_t coord(std::size_t a, std::size_t j) const { return coords_[a * moduli_.size() + j]; }
  std::size_t index_of(const std::vector<std::uint64_t>& coords) const;

 private:
  std::vector<std::uint64_t> moduli_;
  std::vector<std::uint64_t> coords_;
  std::size_t size_ = 1;
};

struct LatticeOptions {
  /// Largest |G| accepted; 0 means p^6.
  std::uint64_t max_order = 0;
  /// Largest number of subgroups enumerated before giving up.
  std::size_t max_subgroups = 200000;
};

struct Subgroup {
  /// Membership bitset over ElementTable indices.
  std::vector<std::uint64_t> members;
  std::size_t order = 1;
  /// Isomorphism type of the subgroup.
  AbelianPGroup type{2, {}};
  bool contains(std::size_t element) const { return (members[element / 64] >> (element % 64)) & 1U; }
};

/// All subgroups of G with containment and the Moebius values mu(H, G).
class SubgroupLattice {
 public:
  SubgroupLattice(const AbelianPGroup& g, const LatticeOptions& options = {});

  const AbelianPGroup& ambient() const { return ambient_; }
  std::size_t size() const { return subgroups_.size(); }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  const Subgroup& subgroup(std::size_t i) const { return subgroups_[i]; }
  /// True if subgroup i is contained in subgroup j.
  bool is_subgroup_of(std::size_t i, std::size_t j) const;
  /// mu(H_i, G).
  long moebius(std::size_t i) const { return moebius_[i]; }
  std::size_t trivial_index() const { return 0; }
  std::size_t whole_index() const { return subgroups_.size() - 1; }

 private:
  AbelianPGroup ambient_;
  std::vector<Subgroup> subgroups_;  // sorted by order, ties by bitset
  std::vector<long> moebius_;
};

SubgroupLattice subgroup_lattice(const AbelianPGroup& g, const LatticeOptions& options = {});

}  // namespace ascgf
