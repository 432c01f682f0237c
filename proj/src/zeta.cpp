#include "ascgf/zeta.hpp"

#include <stdexcept>

#include "ascgf/polynomial.hpp"

namespace ascgf {

PlaceTable::PlaceTable(BigInt q, std::vector<BigInt> counts) : q_(std::move(q)), counts_(std::move(counts)) {}

long moebius(std::uint64_t n) {
  long result = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

namespace {

TruncatedSeries zeta_check_product(const PlaceTable& table) {
  const unsigned n = table.order();
  TruncatedSeries product = TruncatedSeries::one(n);
  for (unsigned d = 1; d <= n; ++d) {
    // (1 - X^d)^{-b_d}
    product *= substitute(pow_series(expand_factor(1, 1, 1, n / d), -table.count(d)), d, n);
  }
  return product;
}

}  // namespace

PlaceTable place_counts(const BigInt& q, unsigned order) {
  if (!as_prime_power(q)) throw std::invalid_argument("q = " + to_string(q) + " is not a prime power");
  std::vector<BigInt> counts;
  counts.reserve(order);
  for (unsigned n = 1; n <= order; ++n) {
    if (n == 1) {
      counts.push_back(q + 1);
      continue;
    }
    BigInt sum = 0;
    for (std::uint64_t d : divisors(n)) {
      const long mu = moebius(d);
      if (mu != 0) sum += BigInt(mu) * ipow(q, n / d);
    }
    BigInt b;
    mpz_divexact_ui(b.get_mpz_t(), sum.get_mpz_t(), n);
    counts.push_back(std::move(b));
  }
  PlaceTable table(q, std::move(counts));
  if (order > 0 && zeta_check_product(table) != zeta_factored(q).expand(order)) {
    throw std::logic_error("place counts for q = " + to_string(q) + " fail the zeta identity");
  }
  return table;
}

FactoredGF zeta_factored(const BigInt& q) { return zeta_at(q, 0, 1); }

FactoredGF zeta_at(const BigInt& q, std::uint64_t alpha, std::uint64_t beta) {
  FactoredGF f(q);
  f.mul_factor(alpha, beta, -1);
  f.mul_factor(alpha + 1, beta, -1);
  return f;
}

TruncatedSeries euler_product(const LocalFamily& local, const BigInt& q, unsigned order) {
  return euler_product(local, place_counts(q, order), order);
}

TruncatedSeries euler_product(const LocalFamily& local, const PlaceTable& places, unsigned order) {
  if (places.order() < order) throw std::invalid_argument("place table is shorter than the requested order");
  TruncatedSeries product = TruncatedSeries::one(order);
  for (unsigned n = 1; n <= order; ++n) {
    const unsigned inner = order / n;
    const BigInt residue_size = ipow(places.q(), n);
    TruncatedSeries factor = local(residue_size, inner);
    if (factor.order() != inner) factor = factor.truncated(inner);
    if (factor[0] != 1) {
      throw std::domain_error("local factor at residue size " + to_string(residue_size) + " has constant term " +
                              to_string(factor[0]) + ", expected 1");
    }
    // Raising to b_n before substituting X -> X^n needs only floor(N/n) terms.
    product *= substitute(pow_series(factor, places.count(n)), n, order);
  }
  return product;
}

}  // namespace ascgf
