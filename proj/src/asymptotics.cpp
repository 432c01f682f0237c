#include "ascgf/asymptotics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ascgf/conductor.hpp"

namespace ascgf {

namespace {

// Innermost (largest s) first.
struct BlockKey {
  Rational s;
  std::uint64_t d;
  bool operator<(const BlockKey& o) const {
    if (s != o.s) return s > o.s;
    return d < o.d;
  }
};

Rational ratio_of(std::uint64_t alpha, std::uint64_t beta) {
  return make_rational(BigInt(static_cast<unsigned long>(alpha)), BigInt(static_cast<unsigned long>(beta)));
}

std::map<BlockKey, long> net_blocks(const FactoredGF& f) {
  std::map<BlockKey, long> out;
  for (const auto& [key, e] : f.factors()) {
    const Rational s = ratio_of(key.alpha, key.beta);
    const std::uint64_t v = to_u64(s.get_den());
    for (std::uint64_t d : divisors(key.beta / v)) out[{s, d}] -= e;
  }
  return out;
}

std::vector<SpectrumEntry> to_entries(const std::map<BlockKey, long>& blocks) {
  std::vector<SpectrumEntry> out;
  for (const auto& [key, order] : blocks) {
    if (order == 0) continue;
    out.push_back({key.s, key.d, euler_phi(key.d) * to_u64(key.s.get_den()), order});
  }
  return out;
}

std::uint64_t num_u64(const Rational& s) { return to_u64(s.get_num()); }
std::uint64_t den_u64(const Rational& s) { return to_u64(s.get_den()); }

}  // namespace

Polynomial SpectrumEntry::block_polynomial(const BigInt& base) const {
  const BigInt c = ipow(base, num_u64(radius_exponent));
  return cyclotomic(cyclotomic_index).scale_variable(Rational(c)).substitute_power(den_u64(radius_exponent));
}

std::vector<SpectrumEntry> pole_spectrum(const FactoredGF& f) { return to_entries(net_blocks(f)); }

std::vector<SpectrumEntry> pole_spectrum(const RationalGF& f) {
  std::vector<SpectrumEntry> out;
  Polynomial rest = f.poly();
  for (SpectrumEntry entry : poles_only(pole_spectrum(f.factored()))) {
    const Polynomial block = entry.block_polynomial(f.base());
    Polynomial quotient;
    while (entry.order > 0 && divides(block, rest, &quotient)) {
      rest = quotient;
      --entry.order;
    }
    if (entry.order > 0) out.push_back(entry);
  }
  return out;
}

std::vector<SpectrumEntry> poles_only(const std::vector<SpectrumEntry>& spectrum) {
  std::vector<SpectrumEntry> out;
  std::copy_if(spectrum.begin(), spectrum.end(), std::back_inserter(out),
               [](const SpectrumEntry& e) { return e.order > 0; });
  return out;
}

PoleReport innermost_pole(const FactoredGF& f) {
  const auto poles = poles_only(pole_spectrum(f));
  if (poles.empty()) throw std::domain_error("function has no poles");
  PoleReport report;
  report.radius_exponent = poles.front().radius_exponent;
  for (const auto& e : poles) {
    if (e.radius_exponent != report.radius_exponent) break;
    report.points += e.points;
    report.multiplicity = std::max(report.multiplicity, e.order);
  }
  if (report.points != 1) return report;

  // A single point forces v = 1 and d in {1, 2}, so x0 = +-base^{-s}.
  const std::uint64_t s = num_u64(report.radius_exponent);
  const bool positive = poles.front().cyclotomic_index == 1;
  report.location = Rational(positive ? 1 : -1) / Rational(ipow(f.base(), s));
  if (report.multiplicity != 1 || !positive) return report;

  // (1 - Y^beta)/(1 - Y) -> beta as Y = base^s X -> 1.
  Rational c = 1;
  long vanishing = 0;
  for (const auto& [key, e] : f.factors()) {
    if (key.alpha == s * key.beta) {
      vanishing += e;
      c *= rpow(Rational(static_cast<long>(key.beta)), e);
    } else {
      const auto shift = static_cast<std::int64_t>(key.alpha) - static_cast<std::int64_t>(s * key.beta);
      c *= rpow(1 - rpow(Rational(f.base()), shift), e);
    }
  }
  if (vanishing != -1) throw std::logic_error("pole order bookkeeping is inconsistent");
  report.leading_constant = c;
  return report;
}

Rational leading_constant(const AbelianPGroup& g, const BigInt& q) {
  if (g.is_trivial()) throw std::invalid_argument("the trivial group has no pole; leading constant is undefined");
  const auto inv = invariant_sequence(g);
  const PoleReport report = innermost_pole(global_asc_gf(g, q));
  if (report.radius_exponent != Rational(inv.a_prime) || report.points != 1 || report.multiplicity != 1 ||
      !report.leading_constant) {
    throw std::logic_error("innermost pole of the global function of " + g.name() + " is not simple at q^-" +
                           std::to_string(inv.a_prime));
  }
  return *report.leading_constant;
}

// ---------------------------------------------------------------------------

Rational RadiusBlock::coefficient(std::uint64_t n) const {
  Rational sum = 0;
  const long deg = lifted_numerator.degree();
  for (std::uint64_t j = n % period; j <= n && static_cast<long>(j) <= deg; j += period) {
    if (lifted_numerator[j] == 0) continue;
    const std::uint64_t k = (n - j) / period;
    sum += lifted_numerator[j] * Rational(binomial(BigInt(static_cast<unsigned long>(k + multiplicity - 1)),
                                                   multiplicity - 1) *
                                          ipow(ratio, k));
  }
  return sum;
}

Rational CoefficientFormula::coefficient(std::uint64_t n) const {
  Rational sum = polynomial_part[n];
  for (const auto& b : blocks) sum += b.coefficient(n);
  return sum;
}

std::string CoefficientFormula::describe() const {
  std::ostringstream out;
  out << "a_n = [X^n](" << polynomial_part.to_string() << ")";
  for (const auto& b : blocks) {
    out << "\n  + sum_{j = n mod " << b.period << "} M_j * ";
    if (b.multiplicity > 1) out << "binomial((n-j)/" << b.period << " + " << b.multiplicity - 1 << ", " << b.multiplicity - 1 << ") * ";
    out << to_string(b.ratio) << "^((n-j)/" << b.period << ")"
        << "  [|X| = q^-" << to_string(b.radius_exponent) << ", M = " << b.lifted_numerator.to_string() << "]";
  }
  return out.str();
}

CoefficientFormula exact_coefficient_formula(const FactoredGF& f) {
  const BigInt& base = f.base();
  const auto poles = poles_only(pole_spectrum(f));

  Polynomial full_den = Polynomial::constant(1);
  for (const auto& e : poles) full_den *= pow(e.block_polynomial(base), static_cast<std::uint64_t>(e.order));
  Polynomial num;
  if (!divides(f.denominator(), f.numerator() * full_den, &num)) {
    throw std::logic_error("pole blocks do not account for the denominator of " + f.symbolic());
  }
  auto [poly_part, rest] = divmod(num, full_den);
  CoefficientFormula formula{poly_part, {}};

  for (std::size_t i = 0; i < poles.size();) {
    const Rational s = poles[i].radius_exponent;
    Polynomial block_den = Polynomial::constant(1);
    std::uint64_t period_scale = 1;
    unsigned multiplicity = 0;
    for (; i < poles.size() && poles[i].radius_exponent == s; ++i) {
      block_den *= pow(poles[i].block_polynomial(base), static_cast<std::uint64_t>(poles[i].order));
      period_scale = std::lcm(period_scale, poles[i].cyclotomic_index);
      multiplicity = std::max(multiplicity, static_cast<unsigned>(poles[i].order));
    }
    Polynomial others;
    divides(block_den, full_den, &others);
    Polynomial block_num = others.degree() == 0 ? divmod(rest * Polynomial::constant(1 / others[0]), block_den).second
                                                : divmod(rest * inverse_mod(others, block_den), block_den).second;

    RadiusBlock block;
    block.radius_exponent = s;
    block.denominator = block_den;
    block.numerator = block_num;
    block.ratio = ipow(base, num_u64(s) * period_scale);
    block.period = den_u64(s) * period_scale;
    block.multiplicity = multiplicity;
    const Polynomial lifted_den = pow(Polynomial::one_minus(Rational(block.ratio), block.period), multiplicity);
    Polynomial cofactor;
    if (!divides(block_den, lifted_den, &cofactor)) throw std::logic_error("radius block does not divide its lift");
    block.lifted_numerator = block_num * cofactor;
    formula.blocks.push_back(std::move(block));
  }
  return formula;
}

}  // namespace ascgf
