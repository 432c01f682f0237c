#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ascgf/bigint.hpp"

namespace ascgf {

/// Dense univariate polynomial in X with exact rational coefficients.
/// The coefficient vector never carries trailing zeros; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  /// c * X^k.
  static Polynomial monomial(const Rational& c, std::size_t k);
  /// 1 - c X^k.
  static Polynomial one_minus(const Rational& c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational evaluate(const Rational& x) const;
  /// p(X) -> p(X^d).
  Polynomial substitute_power(std::size_t d) const;
  /// p(X) -> p(c X).
  Polynomial scale_variable(const Rational& c) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  Polynomial operator-() const;

  bool operator==(const Polynomial&) const = default;

  std::string to_string(const std::string& var = "X") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

Polynomial pow(const Polynomial& base, std::uint64_t exponent);

/// Quotient and remainder of division by a non-zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

/// Returns the quotient when den divides num exactly, nothing otherwise.
bool divides(const Polynomial& den, const Polynomial& num, Polynomial* quotient = nullptr);

/// Monic greatest common divisor.
Polynomial gcd(Polynomial a, Polynomial b);

/// s with s*a = 1 (mod m); a and m must be coprime.
Polynomial inverse_mod(const Polynomial& a, const Polynomial& m);

/// The d-th cyclotomic polynomial Phi_d(Y), integer coefficients.
Polynomial cyclotomic(std::uint64_t d);

std::uint64_t euler_phi(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace ascgf
