#pragma once

// Approximants of the C_3 conductor generating function whose Euler products
// are finite zeta ratios, and the resulting accumulation of pole radii on
// |X| = q^{-1/2}.

#include <cstdint>
#include <optional>
#include <vector>

#include "ascgf/series.hpp"

namespace ascgf {

/// H_A(X) = (1 - X)(1 + QX^2) prod_{a=1}^{A} (1 - Q^{a-1} X^{2a-1})^{(-1)^a} / (1 - Q^2 X^3),
/// with 1 + QX^2 stored as (1 - Q^2 X^4)/(1 - QX^2).
FactoredGF h_approx(const BigInt& residue_size, unsigned depth);

/// Z(qX^2) Z(q^2X^3) / (Z(X) Z(q^2X^4) prod_{a=1}^{A} Z(q^{a-1}X^{2a-1})^{(-1)^a}).
FactoredGF zeta_ratio_global(const BigInt& q, unsigned depth);

/// F_cond / H_A for the local C_3 conductor function at Q.
RationalGF cond_over_approximant(const BigInt& residue_size, unsigned depth);

/// (1 + X + QX^2) / ((1 + QX^2) prod_{a=1}^{A} (1 - Q^{a-1} X^{2a-1})^{(-1)^a}).
RationalGF expected_quotient(const BigInt& residue_size, unsigned depth);

struct ApproximantReport {
  unsigned depth = 1;
  FactoredGF zeta_ratio{BigInt(1)};
  /// a/(2a-1) and (a-1)/(2a-1) for a = 1..A.
  std::vector<Rational> outer_radii;
  std::vector<Rational> inner_radii;
  /// A/(2A-1), the radius contributed by the newest factor.
  Rational new_radius_exponent;
  double numeric_radius = 0;
  /// Odd A adds poles on the new circle, even A adds zeros.
  bool new_radius_is_pole = true;
  /// Whether the new circle survives cancellation in the net spectrum.
  bool new_radius_in_spectrum = false;
  /// Order to which the Euler product of H_A matched the zeta ratio.
  unsigned match_order = 0;
  bool euler_matches = false;
  bool quotient_identity = false;
  /// No denominator factor of F_cond / H_A has radius exponent > 1/2.
  bool quotient_regular_inside = false;
  /// |[X^n] F_cond / zeta ratio| <= margin q^{n(1+1/A)/2} for n <= order.
  std::optional<bool> growth_bound;
};

struct RootModulusCheck {
  BigInt residue_size;
  double modulus = 0;
  double expected = 0;
  bool ok = false;
};

struct AccumulationReport {
  BigInt q;
  unsigned order = 0;
  double limit = 0;
  std::vector<ApproximantReport> approximants;
  bool radii_monotone = false;
  bool fractions_reduced_distinct = false;
  std::vector<RootModulusCheck> roots;

  /// All exact and numeric checks; the growth bound is reported separately.
  bool passed() const;
};

struct AccumulationOptions {
  unsigned order = 20;
  bool growth_bound = true;
  long margin = 10;
  double tolerance = 1e-9;
  std::vector<BigInt> root_residue_sizes{3, 9, 27};
};

/// Throws std::invalid_argument if A_max < 2 or q is not a power of 3.
AccumulationReport pole_accumulation_report(const BigInt& q, unsigned max_depth, const AccumulationOptions& options = {});

/// Roots of 1 + X + QX^2 by the quadratic formula, compared with Q^{-1/2}.
RootModulusCheck quadratic_root_check(const BigInt& residue_size, double tolerance = 1e-9);

}  // namespace ascgf
