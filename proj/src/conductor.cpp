#include "ascgf/conductor.hpp"

#include <stdexcept>

#include "ascgf/zeta.hpp"

namespace ascgf {

namespace {

void require_power_of_p(const AbelianPGroup& g, const BigInt& size, const char* what) {
  auto k = log_exact(size, g.prime());
  if (!k || *k == 0) {
    throw std::invalid_argument(std::string(what) + " = " + to_string(size) + " is not a positive power of p = " +
                                std::to_string(g.prime()));
  }
}

// c_i p^i, which is always an integer.
std::uint64_t scaled_c(const InvariantSequence& inv, unsigned i, std::uint64_t p) {
  const Rational v = inv.c_at(i) * Rational(ipow(BigInt(static_cast<unsigned long>(p)), i));
  return to_u64(to_integer(v, "c_" + std::to_string(i) + " * p^" + std::to_string(i)));
}

}  // namespace

LocalCountProfile local_count_profile(const AbelianPGroup& g, const BigInt& residue_size, unsigned max_jump) {
  require_power_of_p(g, residue_size, "residue field size Q");
  LocalCountProfile profile{g, residue_size, {}};
  for (unsigned k = 0; k <= max_jump; ++k) profile.cumulative.push_back(ipow(residue_size, tau(g, k)));
  return profile;
}

FactoredGF local_asc_gf(const AbelianPGroup& g, const BigInt& residue_size) {
  require_power_of_p(g, residue_size, "residue field size Q");
  const auto inv = invariant_sequence(g);
  const std::uint64_t p = g.prime();
  FactoredGF f(residue_size);
  // Factors with i > t are 1 and are never formed.
  std::uint64_t pi = 1;
  for (unsigned i = 0; i <= g.exponent_log() && !g.is_trivial(); ++i, pi *= p) {
    f.mul_factor(scaled_c(inv, i, p), pi, 1);
    f.mul_factor(to_u64(to_integer(inv.c_at(i + 1) * Rational(pi), "c_{i+1} p^i")), pi, -1);
  }
  return f;
}

FactoredGF global_asc_gf(const AbelianPGroup& g, const BigInt& q) {
  require_power_of_p(g, q, "q");
  const auto inv = invariant_sequence(g);
  const std::uint64_t p = g.prime();
  FactoredGF f = FactoredGF::one(q);
  std::uint64_t pi = 1;
  for (unsigned i = 0; i <= g.exponent_log() && !g.is_trivial(); ++i, pi *= p) {
    const auto upper = to_u64(to_integer(inv.c_at(i + 1) * Rational(pi), "c_{i+1} p^i"));
    const auto lower = scaled_c(inv, i, p);
    f *= zeta_at(q, upper, pi);
    f /= zeta_at(q, lower, pi);
  }
  return f;
}

TruncatedSeries global_asc_euler_series(const AbelianPGroup& g, const BigInt& q, unsigned order) {
  require_power_of_p(g, q, "q");
  return euler_product([&](const BigInt& Q, unsigned n) { return local_asc_gf(g, Q).expand(n); }, q, order);
}

RationalGF local_cond_gf(const AbelianPGroup& g, const BigInt& residue_size) {
  const FactoredGF asc = local_asc_gf(g, residue_size);
  const Polynomial num = asc.numerator();
  const Polynomial den = asc.denominator();
  // (D + X (N - D)) / D
  const Polynomial poly = den + Polynomial::monomial(1, 1) * (num - den);
  return RationalGF(poly, asc.denominator_part().inverse());
}

TruncatedSeries global_cond_series(const AbelianPGroup& g, const BigInt& q, unsigned order) {
  require_power_of_p(g, q, "q");
  return euler_product([&](const BigInt& Q, unsigned n) { return local_cond_gf(g, Q).expand(n); }, q, order);
}

DiscSeries disc_series(const AbelianPGroup& g, const BigInt& q, unsigned order) {
  if (g.multiplicities() != std::vector<unsigned>{1}) {
    throw std::invalid_argument("discriminant series is only available for cyclic groups of prime order, got " +
                                g.name());
  }
  const auto multiplier = static_cast<unsigned>(g.prime() - 1);
  const TruncatedSeries cond = global_cond_series(g, q, order / multiplier);
  return DiscSeries{substitute(cond, multiplier, order), multiplier, g.prime() > 3};
}

// ---------------------------------------------------------------------------

JumpLocalGF::JumpLocalGF(std::uint64_t p, unsigned e, BigInt residue_size)
    : p_(p), e_(e), residue_size_(std::move(residue_size)) {
  if (e_ == 0) throw std::invalid_argument("jump generating function needs e >= 1");
  require_power_of_p(AbelianPGroup::cyclic(p_, e_), residue_size_, "residue field size Q");
  std::uint64_t pi = 1;
  for (unsigned i = 0; i < e_; ++i, pi *= p_) {
    FactoredGF f(residue_size_);
    f.mul_factor(pi - 1, 1, 1);
    f.mul_factor(pi * p_, p_, 1);
    f.mul_factor(pi, 1, -1);
    f.mul_factor(pi * p_ - 1, p_, -1);
    factors_.push_back(std::move(f));
  }
}

std::vector<std::uint64_t> JumpLocalGF::weights() const {
  std::vector<std::uint64_t> w;
  std::uint64_t pi = 1;
  for (unsigned i = 0; i < e_; ++i, pi *= p_) w.push_back(pi);
  return w;
}

MultivariateSeries JumpLocalGF::expand(std::uint64_t bound) const {
  const auto w = weights();
  std::vector<TruncatedSeries> univariate;
  for (unsigned i = 0; i < e_; ++i) univariate.push_back(factors_[i].expand(static_cast<unsigned>(bound / w[i])));
  return MultivariateSeries::product_of_univariate(univariate, w, bound);
}

FactoredGF JumpLocalGF::specialized() const {
  FactoredGF out(residue_size_);
  const auto w = weights();
  for (unsigned i = 0; i < e_; ++i) out *= factors_[i].substitute(w[i]);
  return out;
}

JumpLocalGF jump_local_gf(std::uint64_t p, unsigned e, const BigInt& residue_size) {
  return JumpLocalGF(p, e, residue_size);
}

TruncatedSeries jump_global_series(std::uint64_t p, unsigned e, const BigInt& q, unsigned order) {
  return euler_product([&](const BigInt& Q, unsigned n) { return jump_local_gf(p, e, Q).expand(n).specialize(); }, q,
                       order);
}

// ---------------------------------------------------------------------------

CondRationalityCheck fit_cond_rational(const AbelianPGroup& g, const BigInt& q, unsigned fit_terms,
                                       unsigned verify_order) {
  if (verify_order + 1 < fit_terms) throw std::invalid_argument("verification order must cover the fitted terms");
  CondRationalityCheck check{global_cond_series(g, q, verify_order), std::nullopt, std::nullopt};
  check.fit = fit_rational(check.series, fit_terms);
  if (!check.fit) return check;
  const TruncatedSeries candidate = TruncatedSeries::from_polynomial(check.fit->numerator, verify_order) *
                                    inverse(TruncatedSeries::from_polynomial(check.fit->denominator, verify_order));
  check.first_mismatch = first_mismatch(candidate, check.series);
  return check;
}

}  // namespace ascgf
