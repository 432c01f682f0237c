#include "ascgf/series.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ascgf {

TruncatedSeries::TruncatedSeries(unsigned order) : c_(order + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  c_.resize(order + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::one(unsigned order) {
  TruncatedSeries s(order);
  s.c_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, unsigned order) {
  TruncatedSeries s(order);
  for (std::size_t i = 0; i <= order && i < p.coefficients().size(); ++i) s.c_[i] = p.coefficients()[i];
  return s;
}

unsigned TruncatedSeries::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return static_cast<unsigned>(i);
  }
  return order() + 1;
}

TruncatedSeries TruncatedSeries::truncated(unsigned order) const {
  if (order > this->order()) {
    throw std::invalid_argument("cannot extend a series of order " + std::to_string(this->order()) + " to order " +
                                std::to_string(order));
  }
  return TruncatedSeries(order, std::vector<Rational>(c_.begin(), c_.begin() + order + 1));
}

std::vector<BigInt> TruncatedSeries::integer_coefficients() const {
  std::vector<BigInt> out;
  out.reserve(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out.push_back(to_integer(c_[i], "coefficient " + std::to_string(i)));
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  if (other.order() != order()) throw std::invalid_argument("series orders differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  if (other.order() != order()) throw std::invalid_argument("series orders differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= other.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& other) {
  if (other.order() != order()) throw std::invalid_argument("series orders differ");
  const std::size_t n = c_.size();
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (other.c_[j] != 0) out[i + j] += c_[i] * other.c_[j];
    }
  }
  c_ = std::move(out);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

TruncatedSeries pow_series(const TruncatedSeries& s, const BigInt& exponent) {
  if (s[0] != 1) throw std::domain_error("pow_series: constant term must be 1, got " + to_string(s[0]));
  const unsigned n = s.order();
  TruncatedSeries g = s;
  g[0] = 0;
  const unsigned v = g.valuation();
  TruncatedSeries result = TruncatedSeries::one(n);
  if (v > n) return result;
  TruncatedSeries g_power = TruncatedSeries::one(n);
  for (unsigned k = 1; k <= n / v; ++k) {
    g_power *= g;
    result += g_power * Rational(binomial(exponent, k));
  }
  return result;
}

TruncatedSeries substitute(const TruncatedSeries& s, unsigned d, std::optional<unsigned> order) {
  if (d == 0) throw std::invalid_argument("substitute: d must be positive");
  const unsigned out_order = order.value_or(s.order() * d);
  if (out_order / d > s.order()) {
    throw std::invalid_argument("substitute: input order " + std::to_string(s.order()) + " too small for output order " +
                                std::to_string(out_order));
  }
  TruncatedSeries out(out_order);
  for (unsigned i = 0; i * d <= out_order; ++i) out[i * d] = s[i];
  return out;
}

TruncatedSeries inverse(const TruncatedSeries& s) {
  if (s[0] == 0) throw std::domain_error("inverse: constant term is zero");
  const unsigned n = s.order();
  TruncatedSeries out(n);
  const Rational inv0 = Rational(1) / s[0];
  out[0] = inv0;
  for (unsigned k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (unsigned j = 1; j <= k; ++j) acc += s[j] * out[k - j];
    out[k] = -acc * inv0;
  }
  return out;
}

TruncatedSeries log_series(const TruncatedSeries& s) {
  if (s[0] != 1) throw std::domain_error("log_series: constant term must be 1, got " + to_string(s[0]));
  const unsigned n = s.order();
  // L' = s'/s, integrated termwise.
  TruncatedSeries derivative(n);
  for (unsigned k = 1; k <= n; ++k) derivative[k - 1] = s[k] * k;
  const TruncatedSeries quotient = derivative * inverse(s);
  TruncatedSeries out(n);
  for (unsigned k = 1; k <= n; ++k) out[k] = quotient[k - 1] / k;
  return out;
}

TruncatedSeries exp_series(const TruncatedSeries& s) {
  if (s[0] != 0) throw std::domain_error("exp_series: constant term must be 0, got " + to_string(s[0]));
  const unsigned n = s.order();
  TruncatedSeries out(n);
  out[0] = 1;
  // n E_n = sum_{k=1}^{n} k u_k E_{n-k}
  for (unsigned m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (unsigned k = 1; k <= m; ++k) acc += s[k] * k * out[m - k];
    out[m] = acc / m;
  }
  return out;
}

std::optional<unsigned> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
  const unsigned n = std::min(a.order(), b.order());
  for (unsigned i = 0; i <= n; ++i) {
    if (a[i] != b[i]) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

TruncatedSeries expand_factor(const BigInt& c, std::uint64_t beta, long exponent, unsigned order) {
  TruncatedSeries out(order);
  const BigInt e(exponent);
  BigInt power = 1;  // (-c)^k
  for (std::uint64_t k = 0; k * beta <= order; ++k) {
    out[k * beta] = binomial(e, k) * power;
    power *= -c;
  }
  return out;
}

namespace {

// s *= f where f is supported on multiples of beta.
void multiply_sparse(TruncatedSeries& s, const TruncatedSeries& f, std::uint64_t beta) {
  const unsigned n = s.order();
  for (unsigned m = n + 1; m-- > 0;) {
    Rational acc = s[m] * f[0];
    for (std::uint64_t k = beta; k <= m; k += beta) {
      if (f[k] != 0 && s[m - k] != 0) acc += f[k] * s[m - k];
    }
    s[m] = acc;
  }
}

std::string factor_text(const BigInt& c, std::uint64_t beta) {
  std::ostringstream os;
  os << "(1 - ";
  if (c != 1) os << c.get_str() << "*";
  os << "X";
  if (beta > 1) os << "^" << beta;
  os << ")";
  return os.str();
}

std::string join_product(const std::vector<std::string>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? "*" : "") + terms[i];
  return out;
}

std::string format_quotient(const std::vector<std::string>& num, const std::vector<std::string>& den) {
  std::string top = num.empty() ? "1" : join_product(num);
  if (den.empty()) return top;
  if (den.size() == 1) return top + "/" + den.front();
  return top + "/(" + join_product(den) + ")";
}

}  // namespace

FactoredGF::FactoredGF(BigInt base) : base_(std::move(base)) {
  if (base_ < 1) throw std::invalid_argument("factored generating function base must be positive");
}

FactoredGF FactoredGF::factor(const BigInt& base, std::uint64_t alpha, std::uint64_t beta, long exponent) {
  FactoredGF f(base);
  f.mul_factor(alpha, beta, exponent);
  return f;
}

long FactoredGF::exponent_of(std::uint64_t alpha, std::uint64_t beta) const {
  auto it = factors_.find({alpha, beta});
  return it == factors_.end() ? 0 : it->second;
}

FactoredGF& FactoredGF::mul_factor(std::uint64_t alpha, std::uint64_t beta, long exponent) {
  if (beta == 0) throw std::invalid_argument("factor degree beta must be positive");
  if (exponent == 0) return *this;
  const FactorKey key{alpha, beta};
  long& e = factors_[key];
  e += exponent;
  if (e == 0) factors_.erase(key);
  return *this;
}

FactoredGF& FactoredGF::operator*=(const FactoredGF& other) {
  if (other.base_ != base_) {
    throw std::invalid_argument("cannot combine factored functions over bases " + to_string(base_) + " and " +
                                to_string(other.base_));
  }
  for (const auto& [key, e] : other.factors_) mul_factor(key.alpha, key.beta, e);
  return *this;
}

FactoredGF& FactoredGF::operator/=(const FactoredGF& other) { return *this *= other.inverse(); }

FactoredGF FactoredGF::power(long exponent) const {
  FactoredGF out(base_);
  for (const auto& [key, e] : factors_) out.mul_factor(key.alpha, key.beta, e * exponent);
  return out;
}

FactoredGF FactoredGF::substitute(std::uint64_t d) const {
  if (d == 0) throw std::invalid_argument("substitute: d must be positive");
  FactoredGF out(base_);
  for (const auto& [key, e] : factors_) out.mul_factor(key.alpha, key.beta * d, e);
  return out;
}

TruncatedSeries FactoredGF::expand(unsigned order) const {
  TruncatedSeries out = TruncatedSeries::one(order);
  for (const auto& [key, e] : factors_) {
    if (key.beta > order) continue;
    multiply_sparse(out, expand_factor(ipow(base_, key.alpha), key.beta, e, order), key.beta);
  }
  return out;
}

Polynomial FactoredGF::numerator() const {
  Polynomial out = Polynomial::constant(1);
  for (const auto& [key, e] : factors_) {
    if (e > 0) out *= pow(Polynomial::one_minus(Rational(ipow(base_, key.alpha)), key.beta), e);
  }
  return out;
}

Polynomial FactoredGF::denominator() const { return inverse().numerator(); }

FactoredGF FactoredGF::numerator_part() const {
  FactoredGF out(base_);
  for (const auto& [key, e] : factors_) {
    if (e > 0) out.mul_factor(key.alpha, key.beta, e);
  }
  return out;
}

FactoredGF FactoredGF::denominator_part() const { return inverse().numerator_part(); }

Rational FactoredGF::evaluate(const Rational& x) const {
  Rational out = 1;
  for (const auto& [key, e] : factors_) {
    const Rational value = Rational(1) - Rational(ipow(base_, key.alpha)) * rpow(x, static_cast<std::int64_t>(key.beta));
    out *= rpow(value, e);
  }
  return out;
}

std::string FactoredGF::symbolic() const {
  std::vector<std::string> num, den;
  for (const auto& [key, e] : factors_) {
    std::string text = factor_text(ipow(base_, key.alpha), key.beta);
    const long mag = e > 0 ? e : -e;
    if (mag > 1) text += "^" + std::to_string(mag);
    (e > 0 ? num : den).push_back(std::move(text));
  }
  return format_quotient(num, den);
}

// ---------------------------------------------------------------------------

RationalGF::RationalGF(Polynomial poly, FactoredGF factored) : poly_(std::move(poly)), factored_(std::move(factored)) {
  canonicalize();
}

RationalGF::RationalGF(FactoredGF factored) : RationalGF(Polynomial::constant(1), std::move(factored)) {}

void RationalGF::canonicalize() {
  if (poly_[0] != 1) throw std::invalid_argument("rational generating function polynomial part must have constant term 1");
  for (const auto& c : poly_.coefficients()) {
    if (!is_integer(c)) throw std::invalid_argument("rational generating function polynomial part must be integral");
  }
  const BigInt& base = factored_.base();
  // Cancel denominator factors first.
  const auto snapshot = factored_.factors();
  for (const auto& [key, e] : snapshot) {
    if (e >= 0) continue;
    const Polynomial f = Polynomial::one_minus(Rational(ipow(base, key.alpha)), key.beta);
    long remaining = e;
    Polynomial q;
    while (remaining < 0 && poly_.degree() >= static_cast<long>(key.beta) && divides(f, poly_, &q)) {
      poly_ = std::move(q);
      factored_.mul_factor(key.alpha, key.beta, 1);
      ++remaining;
    }
  }
  // Then pull out numerator factors.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint64_t beta = 1; static_cast<long>(beta) <= poly_.degree() && !changed; ++beta) {
      const BigInt lead = abs(poly_.leading().get_num());
      BigInt c = 1;
      for (std::uint64_t alpha = 0; c <= lead && !changed; ++alpha, c *= base) {
        Polynomial q;
        if (divides(Polynomial::one_minus(Rational(c), beta), poly_, &q)) {
          poly_ = std::move(q);
          factored_.mul_factor(alpha, beta, 1);
          changed = true;
        }
        if (base == 1) break;
      }
    }
  }
}

Polynomial RationalGF::numerator() const { return poly_ * factored_.numerator(); }

Polynomial RationalGF::denominator() const { return factored_.denominator(); }

TruncatedSeries RationalGF::expand(unsigned order) const {
  return TruncatedSeries::from_polynomial(poly_, order) * factored_.expand(order);
}

RationalGF& RationalGF::operator*=(const FactoredGF& f) {
  factored_ *= f;
  canonicalize();
  return *this;
}

RationalGF& RationalGF::operator*=(const RationalGF& other) {
  poly_ *= other.poly_;
  factored_ *= other.factored_;
  canonicalize();
  return *this;
}

bool RationalGF::equals(const RationalGF& other) const {
  return numerator() * other.denominator() == other.numerator() * denominator();
}

std::string RationalGF::symbolic() const {
  std::vector<std::string> num, den;
  for (const auto& [key, e] : factored_.factors()) {
    std::string text = factor_text(ipow(factored_.base(), key.alpha), key.beta);
    const long mag = e > 0 ? e : -e;
    if (mag > 1) text += "^" + std::to_string(mag);
    (e > 0 ? num : den).push_back(std::move(text));
  }
  if (poly_.degree() > 0) num.push_back("(" + poly_.to_string() + ")");
  return format_quotient(num, den);
}

// ---------------------------------------------------------------------------

MultivariateSeries::MultivariateSeries(std::vector<std::uint64_t> weights, std::uint64_t bound)
    : weights_(std::move(weights)), bound_(bound) {
  for (auto w : weights_) {
    if (w == 0) throw std::invalid_argument("multivariate series weights must be positive");
  }
}

Rational MultivariateSeries::coefficient(const std::vector<std::uint64_t>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultivariateSeries::add_term(const std::vector<std::uint64_t>& exponents, const Rational& c) {
  if (exponents.size() != weights_.size()) throw std::invalid_argument("exponent vector has the wrong length");
  std::uint64_t degree = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) degree += exponents[i] * weights_[i];
  if (degree > bound_ || c == 0) return;
  Rational& slot = terms_[exponents];
  slot += c;
  if (slot == 0) terms_.erase(exponents);
}

MultivariateSeries MultivariateSeries::product_of_univariate(const std::vector<TruncatedSeries>& factors,
                                                             std::vector<std::uint64_t> weights, std::uint64_t bound) {
  if (factors.size() != weights.size()) throw std::invalid_argument("one univariate factor per variable required");
  MultivariateSeries out(std::move(weights), bound);
  const std::size_t k = factors.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (factors[i].order() < bound / out.weights_[i]) {
      throw std::invalid_argument("univariate factor " + std::to_string(i) + " is truncated below the support bound");
    }
  }
  std::vector<std::uint64_t> exponents(k, 0);
  std::function<void(std::size_t, std::uint64_t, const Rational&)> walk = [&](std::size_t i, std::uint64_t budget,
                                                                              const Rational& acc) {
    if (i == k) {
      out.add_term(exponents, acc);
      return;
    }
    for (std::uint64_t n = 0; n * out.weights_[i] <= budget; ++n) {
      const Rational& c = factors[i][n];
      if (c == 0) continue;
      exponents[i] = n;
      walk(i + 1, budget - n * out.weights_[i], acc * c);
    }
    exponents[i] = 0;
  };
  walk(0, bound, Rational(1));
  return out;
}

TruncatedSeries MultivariateSeries::specialize() const {
  TruncatedSeries out(static_cast<unsigned>(bound_));
  for (const auto& [exponents, c] : terms_) {
    std::uint64_t degree = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) degree += exponents[i] * weights_[i];
    out[degree] += c;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Solves the (possibly overdetermined) system rows * x = rhs exactly; nullopt
// when inconsistent or underdetermined.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs,
                                                 std::size_t unknowns) {
  const std::size_t m = rows.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < unknowns && r < m; ++col) {
    std::size_t pivot = r;
    while (pivot < m && rows[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[pivot], rows[r]);
    std::swap(rhs[pivot], rhs[r]);
    const Rational inv = Rational(1) / rows[r][col];
    for (auto& x : rows[r]) x *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = 0; j < unknowns; ++j) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i) {
    if (rhs[i] != 0) return std::nullopt;
  }
  if (pivot_cols.size() != unknowns) return std::nullopt;
  std::vector<Rational> x(unknowns, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = rhs[i];
  return x;
}

}  // namespace

std::optional<RationalFit> fit_rational(const TruncatedSeries& s, unsigned fitted_terms, unsigned redundancy) {
  if (fitted_terms == 0 || fitted_terms > s.order() + 1) {
    throw std::invalid_argument("fit_rational: need between 1 and order+1 coefficients");
  }
  const auto a = [&](long j) { return j < 0 ? Rational(0) : s[static_cast<std::size_t>(j)]; };
  const long last = static_cast<long>(fitted_terms) - 1;
  for (long total = 0; total + static_cast<long>(redundancy) <= last; ++total) {
    for (long n = 0; n <= total; ++n) {
      const long m = total - n;
      // a_j + sum_{i=1}^{n} b_i a_{j-i} = 0 for m < j <= last.
      std::vector<std::vector<Rational>> rows;
      std::vector<Rational> rhs;
      for (long j = m + 1; j <= last; ++j) {
        std::vector<Rational> row(static_cast<std::size_t>(n));
        for (long i = 1; i <= n; ++i) row[static_cast<std::size_t>(i - 1)] = a(j - i);
        rows.push_back(std::move(row));
        rhs.push_back(-a(j));
      }
      auto b = solve_exact(rows, rhs, static_cast<std::size_t>(n));
      if (!b) continue;
      std::vector<Rational> den(static_cast<std::size_t>(n + 1));
      den[0] = 1;
      for (long i = 1; i <= n; ++i) den[static_cast<std::size_t>(i)] = (*b)[static_cast<std::size_t>(i - 1)];
      Polynomial q(den);
      std::vector<Rational> num(static_cast<std::size_t>(m + 1), Rational(0));
      for (long j = 0; j <= m; ++j) {
        for (long i = 0; i <= std::min(j, n); ++i) num[static_cast<std::size_t>(j)] += q[static_cast<std::size_t>(i)] * a(j - i);
      }
      return RationalFit{Polynomial(num), q, fitted_terms};
    }
  }
  return std::nullopt;
}

}  // namespace ascgf
