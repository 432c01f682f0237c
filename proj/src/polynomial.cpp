#include "ascgf/polynomial.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ascgf {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::one_minus(const Rational& c, std::size_t k) {
  return constant(1) - monomial(c, k);
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Polynomial Polynomial::substitute_power(std::size_t d) const {
  if (d == 0) throw std::invalid_argument("substitute_power: d must be positive");
  if (c_.empty()) return {};
  std::vector<Rational> v((c_.size() - 1) * d + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * d] = c_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::scale_variable(const Rational& c) const {
  std::vector<Rational> v = c_;
  Rational power = 1;
  for (auto& coeff : v) {
    coeff *= power;
    power *= c;
  }
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), Rational(0));
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), Rational(0));
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] -= other.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& coeff : c_) coeff *= s;
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& coeff : out.c_) coeff = -coeff;
  return out;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

Polynomial pow(const Polynomial& base, std::uint64_t exponent) {
  Polynomial result = Polynomial::constant(1);
  Polynomial b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (num.degree() < den.degree()) return {Polynomial(), num};
  std::vector<Rational> rem = num.coefficients();
  const auto& d = den.coefficients();
  const std::size_t dd = d.size() - 1;
  std::vector<Rational> quot(rem.size() - dd, Rational(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational factor = rem[k + dd] / d[dd];
    quot[k] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= factor * d[j];
  }
  rem.resize(dd);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

bool divides(const Polynomial& den, const Polynomial& num, Polynomial* quotient) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) return false;
  if (quotient != nullptr) *quotient = std::move(q);
  return true;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());
}

Polynomial inverse_mod(const Polynomial& a, const Polynomial& m) {
  // Extended Euclid on (m, a) tracking the coefficient of a.
  Polynomial r0 = m, r1 = divmod(a, m).second;
  Polynomial s0, s1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Polynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::domain_error("inverse_mod: arguments are not coprime");
  return divmod(s0 * (Rational(1) / r0.leading()), m).second;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Polynomial cyclotomic(std::uint64_t d) {
  static std::mutex mutex;
  static std::map<std::uint64_t, Polynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  if (d == 0) throw std::invalid_argument("cyclotomic: index must be positive");
  // Phi_d = (Y^d - 1) / prod_{e | d, e < d} Phi_e
  Polynomial result = Polynomial::monomial(1, d) - Polynomial::constant(1);
  for (std::uint64_t e : divisors(d)) {
    if (e == d) continue;
    Polynomial q;
    if (!divides(cyclotomic(e), result, &q)) throw std::logic_error("cyclotomic: inexact division");
    result = std::move(q);
  }
  std::lock_guard lock(mutex);
  cache.emplace(d, result);
  return result;
}

}  // namespace ascgf
