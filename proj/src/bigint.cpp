#include "ascgf/bigint.hpp"

#include <limits>

namespace ascgf {

BigInt ipow(const BigInt& base, std::uint64_t exponent) {
  BigInt result;
  if (exponent <= std::numeric_limits<unsigned long>::max()) {
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
    return result;
  }
  result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

Rational rpow(const Rational& base, std::int64_t exponent) {
  if (exponent >= 0) {
    return make_rational(ipow(base.get_num(), static_cast<std::uint64_t>(exponent)),
                         ipow(base.get_den(), static_cast<std::uint64_t>(exponent)));
  }
  if (base == 0) throw std::domain_error("zero raised to a negative power");
  const auto e = static_cast<std::uint64_t>(-exponent);
  return make_rational(ipow(base.get_den(), e), ipow(base.get_num(), e));
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

BigInt to_integer(const Rational& x, const std::string& what) {
  if (!is_integer(x)) {
    throw std::domain_error("expected an integer for " + what + ", got " + to_string(x));
  }
  return x.get_num();
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

BigInt binomial(const BigInt& top, std::uint64_t k) {
  BigInt num = 1;
  BigInt den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= top - BigInt(static_cast<unsigned long>(i));
    den *= BigInt(static_cast<unsigned long>(i + 1));
  }
  BigInt result;
  mpz_divexact(result.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> as_prime_power(const BigInt& n) {
  if (n < 2) return std::nullopt;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    if (!n.fits_ulong_p()) return std::nullopt;
    return PrimePower{n.get_ui(), 1};
  }
  // Trial division finds the smallest prime factor of any practical field size.
  for (unsigned long d = 2; d < (1UL << 20); ++d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      auto k = log_exact(n, d);
      if (!k) return std::nullopt;
      return PrimePower{d, static_cast<unsigned>(*k)};
    }
  }
  return std::nullopt;
}

std::optional<std::uint64_t> log_exact(const BigInt& n, std::uint64_t p) {
  if (n < 1 || p < 2) return std::nullopt;
  BigInt rest = n;
  std::uint64_t k = 0;
  const BigInt bp(static_cast<unsigned long>(p));
  while (rest > 1) {
    if (!mpz_divisible_p(rest.get_mpz_t(), bp.get_mpz_t())) return std::nullopt;
    rest /= bp;
    ++k;
  }
  return k;
}

std::uint64_t to_u64(const BigInt& x) {
  if (x < 0 || !x.fits_ulong_p()) throw std::overflow_error("value does not fit in 64 bits: " + to_string(x));
  return x.get_ui();
}

}  // namespace ascgf
