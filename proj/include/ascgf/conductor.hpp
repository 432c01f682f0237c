#pragma once

// Generating functions counting G-extensions of F_q(T) and of its completions
// by Artin-Schreier conductor, ordinary conductor and discriminant.
//
// All functions are normalized by 1/|G|: the coefficient of X^n counts
// continuous homomorphisms from the local unit group U^1 (locally) or from the
// idele class group modulo the unramified part (globally) whose invariant has
// degree n.

#include <cstdint>
#include <optional>
#include <vector>

#include "ascgf/abelian_group.hpp"
#include "ascgf/series.hpp"

namespace ascgf {

/// Cumulative local counts T_k = Q^tau(k) = #{phi : U^1 -> G, last jump <= k}.
struct LocalCountProfile {
  AbelianPGroup group;
  BigInt residue_size;
  std::vector<BigInt> cumulative;
};

LocalCountProfile local_count_profile(const AbelianPGroup& g, const BigInt& residue_size, unsigned max_jump);

/// prod_{i=0}^{t} (1 - (Q^{c_i} X)^{p^i}) / (1 - (Q^{c_{i+1}} X)^{p^i}) over base Q.
/// Throws std::invalid_argument unless Q is a power of p.
FactoredGF local_asc_gf(const AbelianPGroup& g, const BigInt& residue_size);

/// prod_{i=0}^{t} Z((q^{c_{i+1}} X)^{p^i}) / Z((q^{c_i} X)^{p^i}) over base q.
FactoredGF global_asc_gf(const AbelianPGroup& g, const BigInt& q);

/// Euler product of local_asc_gf over the places of F_q(T), to order N.
TruncatedSeries global_asc_euler_series(const AbelianPGroup& g, const BigInt& q, unsigned order);

/// 1 + X (F_asc - 1) in canonical form.
RationalGF local_cond_gf(const AbelianPGroup& g, const BigInt& residue_size);

/// Euler product of local_cond_gf, to order N. This series has no closed form
/// in general.
TruncatedSeries global_cond_series(const AbelianPGroup& g, const BigInt& q, unsigned order);

struct DiscSeries {
  TruncatedSeries series;
  /// p - 1: the discriminant divisor of a C_p-extension is (p - 1) times its conductor.
  unsigned conductor_multiplier = 1;
  /// True for p > 3, where the relation is applied beyond the C_2 and C_3 cases.
  bool general_prime_extension = false;
};

/// F_disc(X) = F_cond(X^{p-1}) for G = C_p. Throws std::invalid_argument for other groups.
DiscSeries disc_series(const AbelianPGroup& g, const BigInt& q, unsigned order);

/// Local generating function of G = C_{p^e} refined by all ramification jumps,
/// one variable X_i per jump i, of weighted degree p^i.
class JumpLocalGF {
 public:
  JumpLocalGF(std::uint64_t p, unsigned e, BigInt residue_size);

  std::uint64_t prime() const { return p_; }
  unsigned levels() const { return e_; }
  const BigInt& residue_size() const { return residue_size_; }
  /// Factor in X_i, as a univariate factored function over base Q.
  const FactoredGF& variable_factor(unsigned i) const { return factors_.at(i); }
  std::vector<std::uint64_t> weights() const;

  /// Exact expansion over the support of weighted degree <= bound.
  MultivariateSeries expand(std::uint64_t bound) const;
  /// The univariate function obtained from X_i -> X^{p^i}.
  FactoredGF specialized() const;

 private:
  std::uint64_t p_;
  unsigned e_;
  BigInt residue_size_;
  std::vector<FactoredGF> factors_;
};

JumpLocalGF jump_local_gf(std::uint64_t p, unsigned e, const BigInt& residue_size);

/// Euler product of the specialized multivariate local functions, to order N.
TruncatedSeries jump_global_series(std::uint64_t p, unsigned e, const BigInt& q, unsigned order);

struct CondRationalityCheck {
  TruncatedSeries series;
  std::optional<RationalFit> fit;
  /// First index in (fitted_terms..series.order()] where the fit disagrees.
  std::optional<unsigned> first_mismatch;
  bool verified() const { return fit.has_value() && !first_mismatch.has_value(); }
};

/// Fits a rational function to a_0..a_{fit_terms-1} of the global conductor
/// series and checks it against a_0..a_{verify_order}.
CondRationalityCheck fit_cond_rational(const AbelianPGroup& g, const BigInt& q, unsigned fit_terms,
                                       unsigned verify_order);

}  // namespace ascgf
