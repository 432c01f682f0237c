#pragma once

// Exact integer and rational scalars shared by every module.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ascgf {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Thrown when an enumeration would exceed a configured size limit.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigInt ipow(const BigInt& base, std::uint64_t exponent);
Rational rpow(const Rational& base, std::int64_t exponent);

Rational make_rational(const BigInt& num, const BigInt& den);

bool is_integer(const Rational& x);

/// Converts to an integer, throwing std::domain_error with `what` in the
/// message when `x` has a non-trivial denominator.
BigInt to_integer(const Rational& x, const std::string& what);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

/// Parses "n" or "n/d".
Rational parse_rational(const std::string& text);

/// Generalized binomial coefficient top*(top-1)*...*(top-k+1)/k!, for any
/// integer top (negative or huge).
BigInt binomial(const BigInt& top, std::uint64_t k);

bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

/// Returns (p, k) with n == p^k, k >= 1, or nullopt.
std::optional<PrimePower> as_prime_power(const BigInt& n);

/// Returns k with n == p^k (k >= 0), or nullopt.
std::optional<std::uint64_t> log_exact(const BigInt& n, std::uint64_t p);

std::uint64_t to_u64(const BigInt& x);

}  // namespace ascgf
