#pragma once

// Exact truncated power series and rational generating functions in the
// factored form prod (1 - base^alpha X^beta)^e.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ascgf/bigint.hpp"
#include "ascgf/polynomial.hpp"

namespace ascgf {

/// Default truncation order for expansions.
inline constexpr unsigned kDefaultOrder = 30;

/// Power series a_0 + a_1 X + ... + a_N X^N + O(X^{N+1}).
class TruncatedSeries {
 public:
  /// The zero series of order N.
  explicit TruncatedSeries(unsigned order = 0);
  TruncatedSeries(unsigned order, std::vector<Rational> coeffs);
  static TruncatedSeries one(unsigned order);
  static TruncatedSeries from_polynomial(const Polynomial& p, unsigned order);

  unsigned order() const { return static_cast<unsigned>(c_.size() - 1); }
  const Rational& operator[](std::size_t n) const { return c_.at(n); }
  Rational& operator[](std::size_t n) { return c_.at(n); }
  const std::vector<Rational>& coefficients() const { return c_; }

  /// Smallest n with a_n != 0, or order()+1 for the zero series.
  unsigned valuation() const;
  TruncatedSeries truncated(unsigned order) const;

  /// Coefficients as integers; throws std::domain_error on a fractional coefficient.
  std::vector<BigInt> integer_coefficients() const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& s);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }

  /// Coefficientwise equality; orders must agree.
  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<Rational> c_;
};

/// (1+g)^B for s = 1+g, computed as sum_k binomial(B, k) g^k. Requires a_0 = 1.
TruncatedSeries pow_series(const TruncatedSeries& s, const BigInt& exponent);

/// X -> X^d, truncated to `order` (default: d * s.order()).
TruncatedSeries substitute(const TruncatedSeries& s, unsigned d, std::optional<unsigned> order = std::nullopt);

/// Multiplicative inverse; requires a_0 != 0.
TruncatedSeries inverse(const TruncatedSeries& s);

/// Formal logarithm; requires a_0 = 1.
TruncatedSeries log_series(const TruncatedSeries& s);

/// Formal exponential; requires a_0 = 0.
TruncatedSeries exp_series(const TruncatedSeries& s);

/// Index of the first differing coefficient up to the shorter order, or nullopt.
std::optional<unsigned> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b);

// ---------------------------------------------------------------------------

/// Key of a factor (1 - base^alpha X^beta).
struct FactorKey {
  std::uint64_t alpha = 0;
  std::uint64_t beta = 1;
  auto operator<=>(const FactorKey&) const = default;
};

/// prod (1 - base^alpha X^beta)^e over a finite canonical factor map. No zero
/// exponents are stored, so two values over the same base are equal as
/// rational functions exactly when their factor maps agree.
class FactoredGF {
 public:
  explicit FactoredGF(BigInt base);
  static FactoredGF one(const BigInt& base) { return FactoredGF(base); }
  /// (1 - base^alpha X^beta)^exponent.
  static FactoredGF factor(const BigInt& base, std::uint64_t alpha, std::uint64_t beta, long exponent = 1);

  const BigInt& base() const { return base_; }
  const std::map<FactorKey, long>& factors() const { return factors_; }
  long exponent_of(std::uint64_t alpha, std::uint64_t beta) const;
  bool is_one() const { return factors_.empty(); }

  /// Multiplies by (1 - base^alpha X^beta)^exponent.
  FactoredGF& mul_factor(std::uint64_t alpha, std::uint64_t beta, long exponent);

  FactoredGF& operator*=(const FactoredGF& other);
  FactoredGF& operator/=(const FactoredGF& other);
  friend FactoredGF operator*(FactoredGF a, const FactoredGF& b) { return a *= b; }
  friend FactoredGF operator/(FactoredGF a, const FactoredGF& b) { return a /= b; }
  FactoredGF power(long exponent) const;
  FactoredGF inverse() const { return power(-1); }

  /// X -> X^d: every beta is multiplied by d.
  FactoredGF substitute(std::uint64_t d) const;

  bool operator==(const FactoredGF&) const = default;

  TruncatedSeries expand(unsigned order) const;

  /// Product of the factors with positive exponent, as a dense polynomial.
  Polynomial numerator() const;
  /// Product of the factors with negative exponent (inverted), as a dense polynomial.
  Polynomial denominator() const;
  /// Numerator part as a FactoredGF.
  FactoredGF numerator_part() const;
  /// Denominator part (positive exponents) as a FactoredGF.
  FactoredGF denominator_part() const;

  Rational evaluate(const Rational& x) const;

  /// Human-readable product, e.g. "(1 - X)*(1 - 81*X^3)/((1 - 9*X)*(1 - 9*X^3))".
  std::string symbolic() const;

 private:
  BigInt base_;
  std::map<FactorKey, long> factors_;
};

/// expand(f, N) with f given as (1 - c X^beta)^e, c = base^alpha.
TruncatedSeries expand_factor(const BigInt& c, std::uint64_t beta, long exponent, unsigned order);

// ---------------------------------------------------------------------------

/// A rational function poly(X) * F(X) with F factored and poly an integer
/// polynomial with constant term 1. Needed where the closed form leaves the
/// factored family, such as the local conductor generating function.
///
/// Canonical form: denominator factors of F that divide poly are cancelled,
/// then every factor (1 - base^alpha X^beta) dividing poly is moved into F
/// (beta ascending, then alpha ascending).
class RationalGF {
 public:
  RationalGF(Polynomial poly, FactoredGF factored);
  explicit RationalGF(FactoredGF factored);

  const Polynomial& poly() const { return poly_; }
  const FactoredGF& factored() const { return factored_; }
  const BigInt& base() const { return factored_.base(); }

  /// Dense numerator and denominator of the whole function.
  Polynomial numerator() const;
  Polynomial denominator() const;

  TruncatedSeries expand(unsigned order) const;
  RationalGF& operator*=(const FactoredGF& f);
  RationalGF& operator*=(const RationalGF& other);

  /// Equality as rational functions (cross multiplication).
  bool equals(const RationalGF& other) const;
  /// Structural equality of the canonical representation.
  bool operator==(const RationalGF&) const = default;

  std::string symbolic() const;

 private:
  void canonicalize();
  Polynomial poly_;
  FactoredGF factored_;
};

// ---------------------------------------------------------------------------

/// Power series in X_0..X_{k-1} whose support is bounded by the weighted
/// degree sum_i n_i w_i <= bound.
class MultivariateSeries {
 public:
  MultivariateSeries(std::vector<std::uint64_t> weights, std::uint64_t bound);

  const std::vector<std::uint64_t>& weights() const { return weights_; }
  std::uint64_t bound() const { return bound_; }
  std::size_t variables() const { return weights_.size(); }
  const std::map<std::vector<std::uint64_t>, Rational>& terms() const { return terms_; }

  Rational coefficient(const std::vector<std::uint64_t>& exponents) const;
  void add_term(const std::vector<std::uint64_t>& exponents, const Rational& c);

  /// Product of univariate series, the i-th in X_i.
  static MultivariateSeries product_of_univariate(const std::vector<TruncatedSeries>& factors,
                                                  std::vector<std::uint64_t> weights, std::uint64_t bound);

  /// X_i -> X^{weights[i]}.
  TruncatedSeries specialize() const;

 private:
  std::vector<std::uint64_t> weights_;
  std::uint64_t bound_;
  std::map<std::vector<std::uint64_t>, Rational> terms_;
};

// ---------------------------------------------------------------------------

/// A rational function P/Q found from series coefficients.
struct RationalFit {
  Polynomial numerator;
  /// Q(0) = 1.
  Polynomial denominator;
  /// Number of coefficients a_0.. used for the fit.
  unsigned fitted_terms = 0;
};

/// Smallest total degree P/Q (deg P + deg Q < fitted_terms, with at least
/// `redundancy` unused equations) reproducing a_0..a_{fitted_terms-1}; nullopt
/// if none exists.
std::optional<RationalFit> fit_rational(const TruncatedSeries& s, unsigned fitted_terms, unsigned redundancy = 2);

}  // namespace ascgf
