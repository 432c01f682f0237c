#include "ascgf/merom_demo.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ascgf/asymptotics.hpp"
#include "ascgf/conductor.hpp"
#include "ascgf/zeta.hpp"

namespace ascgf {

namespace {

long alternating(unsigned a) { return a % 2 == 0 ? 1 : -1; }

Rational fraction(std::uint64_t num, std::uint64_t den) {
  return make_rational(BigInt(static_cast<unsigned long>(num)), BigInt(static_cast<unsigned long>(den)));
}

double radius_of(const BigInt& q, const Rational& s) { return std::pow(q.get_d(), -s.get_d()); }

bool growth_within(const TruncatedSeries& s, const BigInt& q, unsigned depth, long margin) {
  // |g_n| <= margin q^{n(A+1)/(2A)}  <=>  (|g_n|/margin)^{2A} <= q^{n(A+1)}
  for (unsigned n = 0; n <= s.order(); ++n) {
    const Rational scaled = abs(s[n]) / margin;
    if (rpow(scaled, 2 * depth) > Rational(ipow(q, static_cast<std::uint64_t>(n) * (depth + 1)))) return false;
  }
  return true;
}

}  // namespace

FactoredGF h_approx(const BigInt& residue_size, unsigned depth) {
  if (depth == 0) throw std::invalid_argument("approximation depth must be at least 1");
  FactoredGF h(residue_size);
  h.mul_factor(0, 1, 1);
  h.mul_factor(2, 4, 1);
  h.mul_factor(1, 2, -1);
  h.mul_factor(2, 3, -1);
  for (unsigned a = 1; a <= depth; ++a) h.mul_factor(a - 1, 2 * a - 1, alternating(a));
  return h;
}

FactoredGF zeta_ratio_global(const BigInt& q, unsigned depth) {
  if (depth == 0) throw std::invalid_argument("approximation depth must be at least 1");
  FactoredGF f = zeta_at(q, 1, 2) * zeta_at(q, 2, 3);
  f /= zeta_factored(q);
  f /= zeta_at(q, 2, 4);
  for (unsigned a = 1; a <= depth; ++a) f /= zeta_at(q, a - 1, 2 * a - 1).power(alternating(a));
  return f;
}

RationalGF cond_over_approximant(const BigInt& residue_size, unsigned depth) {
  const RationalGF cond = local_cond_gf(AbelianPGroup::cyclic(3, 1), residue_size);
  return RationalGF(cond.poly(), cond.factored() / h_approx(residue_size, depth));
}

RationalGF expected_quotient(const BigInt& residue_size, unsigned depth) {
  const Polynomial quadratic({Rational(1), Rational(1), Rational(residue_size)});
  FactoredGF rest(residue_size);
  rest.mul_factor(1, 2, 1);
  rest.mul_factor(2, 4, -1);
  for (unsigned a = 1; a <= depth; ++a) rest.mul_factor(a - 1, 2 * a - 1, -alternating(a));
  return RationalGF(quadratic, rest);
}

RootModulusCheck quadratic_root_check(const BigInt& residue_size, double tolerance) {
  const double Q = residue_size.get_d();
  const std::complex<double> disc = std::sqrt(std::complex<double>(1.0 - 4.0 * Q, 0.0));
  const std::complex<double> r1 = (-1.0 + disc) / (2.0 * Q);
  const std::complex<double> r2 = (-1.0 - disc) / (2.0 * Q);
  RootModulusCheck check{residue_size, std::abs(r1), 1.0 / std::sqrt(Q), false};
  check.ok = std::abs(std::abs(r1) - check.expected) <= tolerance && std::abs(std::abs(r2) - check.expected) <= tolerance &&
             std::abs(r1.imag()) > 0;
  return check;
}

bool AccumulationReport::passed() const {
  if (!radii_monotone || !fractions_reduced_distinct) return false;
  for (const auto& r : roots) {
    if (!r.ok) return false;
  }
  for (const auto& a : approximants) {
    if (!a.euler_matches || !a.quotient_identity || !a.quotient_regular_inside) return false;
  }
  return true;
}

AccumulationReport pole_accumulation_report(const BigInt& q, unsigned max_depth, const AccumulationOptions& options) {
  if (max_depth < 2) throw std::invalid_argument("maximum approximation depth must be at least 2");
  if (!log_exact(q, 3)) throw std::invalid_argument("q = " + to_string(q) + " is not a power of 3");
  const unsigned N = options.order;
  AccumulationReport report;
  report.q = q;
  report.order = N;
  report.limit = 1.0 / std::sqrt(q.get_d());

  const PlaceTable places = place_counts(q, N);
  std::optional<TruncatedSeries> cond;
  if (options.growth_bound) cond = global_cond_series(AbelianPGroup::cyclic(3, 1), q, N);

  std::set<Rational> seen;
  bool reduced = true;
  for (unsigned A = 1; A <= max_depth; ++A) {
    ApproximantReport r;
    r.depth = A;
    r.zeta_ratio = zeta_ratio_global(q, A);
    for (unsigned a = 1; a <= A; ++a) {
      r.outer_radii.push_back(fraction(a, 2 * a - 1));
      r.inner_radii.push_back(fraction(a - 1, 2 * a - 1));
    }
    r.new_radius_exponent = r.outer_radii.back();
    reduced = reduced && std::gcd(A, 2 * A - 1) == 1 && seen.insert(r.new_radius_exponent).second;
    r.numeric_radius = radius_of(q, r.new_radius_exponent);
    r.new_radius_is_pole = A % 2 == 1;
    for (const auto& e : pole_spectrum(r.zeta_ratio)) {
      if (e.radius_exponent == r.new_radius_exponent) r.new_radius_in_spectrum = true;
    }

    const TruncatedSeries euler = euler_product([&](const BigInt& Q, unsigned n) { return h_approx(Q, A).expand(n); },
                                                places, N);
    const TruncatedSeries closed = r.zeta_ratio.expand(N);
    const auto mismatch = first_mismatch(euler, closed);
    r.euler_matches = !mismatch;
    r.match_order = mismatch ? (*mismatch == 0 ? 0 : *mismatch - 1) : N;

    r.quotient_identity = true;
    r.quotient_regular_inside = true;
    for (const BigInt& Q : options.root_residue_sizes) {
      const RationalGF quotient = cond_over_approximant(Q, A);
      r.quotient_identity = r.quotient_identity && quotient.equals(expected_quotient(Q, A));
      for (const auto& [key, e] : quotient.factored().factors()) {
        if (e < 0 && 2 * key.alpha > key.beta) r.quotient_regular_inside = false;
      }
    }
    if (cond) {
      r.growth_bound = growth_within(*cond * inverse(closed), q, A, options.margin);
    }
    report.approximants.push_back(std::move(r));
  }

  bool monotone = true;
  for (std::size_t i = 0; i < report.approximants.size(); ++i) {
    const auto& cur = report.approximants[i];
    if (!(cur.new_radius_exponent > Rational(1, 2)) || !(cur.numeric_radius < report.limit)) monotone = false;
    if (i > 0) {
      const auto& prev = report.approximants[i - 1];
      if (!(cur.new_radius_exponent < prev.new_radius_exponent) || !(cur.numeric_radius > prev.numeric_radius)) {
        monotone = false;
      }
    }
  }
  report.radii_monotone = monotone;
  report.fractions_reduced_distinct = reduced;
  for (const BigInt& Q : options.root_residue_sizes) report.roots.push_back(quadratic_root_check(Q, options.tolerance));
  return report;
}

}  // namespace ascgf
