#pragma once

// Pole structure and coefficient asymptotics of factored rational functions.
//
// A factor (1 - b^alpha X^beta) with alpha/beta = u/v in lowest terms and
// k = beta/v splits as prod_{d | k} Phi_d(b^u X^v). Each block
// Phi_d(b^u X^v) has phi(d) * v roots, all of modulus b^{-u/v}. Distinct
// blocks are coprime, so net orders are read off without any root finding.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ascgf/abelian_group.hpp"
#include "ascgf/series.hpp"

namespace ascgf {

struct SpectrumEntry {
  /// s, with all points of the block on |X| = base^{-s}.
  Rational radius_exponent;
  std::uint64_t cyclotomic_index = 1;
  /// Number of distinct points in the block.
  std::uint64_t points = 1;
  /// Positive for poles, negative for zeros.
  long order = 0;

  /// Phi_d(base^u X^v).
  Polynomial block_polynomial(const BigInt& base) const;
  bool operator==(const SpectrumEntry&) const = default;
};

/// Blocks with non-zero net order, sorted by decreasing radius exponent
/// (innermost first), then cyclotomic index.
std::vector<SpectrumEntry> pole_spectrum(const FactoredGF& f);

/// Poles only: the polynomial part can cancel poles but its own zeros are not
/// cyclotomic blocks and are not reported.
std::vector<SpectrumEntry> pole_spectrum(const RationalGF& f);

std::vector<SpectrumEntry> poles_only(const std::vector<SpectrumEntry>& spectrum);

struct PoleReport {
  Rational radius_exponent;
  /// The pole itself, when the innermost circle carries a single point.
  std::optional<Rational> location;
  std::uint64_t points = 0;
  long multiplicity = 0;
  /// lim (1 - X/x0) f(X) at the pole x0, when it is unique, simple and rational.
  std::optional<Rational> leading_constant;
};

/// Throws std::domain_error when f has no poles.
PoleReport innermost_pole(const FactoredGF& f);

/// C with a_n ~ C q^{a' n} for the global asc generating function of G.
/// Throws std::invalid_argument for the trivial group and std::logic_error if
/// the innermost pole is not simple at q^{-a'}.
Rational leading_constant(const AbelianPGroup& g, const BigInt& q);

/// Contribution of the poles on one circle: N(X)/B(X) = M(X)/(1 - c X^T)^m
/// with deg M < mT, so that
///   a_n = sum_{j <= n, j = n mod T} M_j binomial((n-j)/T + m - 1, m - 1) c^{(n-j)/T}.
struct RadiusBlock {
  Rational radius_exponent;
  Polynomial denominator;
  Polynomial numerator;
  Polynomial lifted_numerator;
  BigInt ratio;
  std::uint64_t period = 1;
  unsigned multiplicity = 1;

  Rational coefficient(std::uint64_t n) const;
};

struct CoefficientFormula {
  /// Non-zero only in degrees <= deg(polynomial_part).
  Polynomial polynomial_part;
  std::vector<RadiusBlock> blocks;

  Rational coefficient(std::uint64_t n) const;
  std::string describe() const;
};

/// Partial fractions of f grouped by pole radius.
CoefficientFormula exact_coefficient_formula(const FactoredGF& f);

}  // namespace ascgf
