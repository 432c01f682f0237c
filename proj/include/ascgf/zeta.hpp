#pragma once

// Places of F_q(T), the zeta function of the projective line, and Euler
// products assembled from local generating functions.

#include <functional>
#include <vector>

#include "ascgf/bigint.hpp"
#include "ascgf/series.hpp"

namespace ascgf {

/// Number of places of F_q(T) of each degree 1..N.
class PlaceTable {
 public:
  PlaceTable(BigInt q, std::vector<BigInt> counts);

  const BigInt& q() const { return q_; }
  unsigned order() const { return static_cast<unsigned>(counts_.size()); }
  /// b_n for 1 <= n <= order().
  const BigInt& count(unsigned n) const { return counts_.at(n - 1); }

 private:
  BigInt q_;
  std::vector<BigInt> counts_;
};

/// b_1 = q + 1 and b_n = (1/n) sum_{d | n} mu(d) q^{n/d} for n >= 2. The table
/// is checked against the zeta identity before it is returned. Throws
/// std::invalid_argument if q is not a prime power.
PlaceTable place_counts(const BigInt& q, unsigned order);

long moebius(std::uint64_t n);

/// Z(X) = 1 / ((1 - X)(1 - qX)).
FactoredGF zeta_factored(const BigInt& q);

/// Z(q^alpha X^beta) = 1 / ((1 - q^alpha X^beta)(1 - q^{alpha+1} X^beta)).
FactoredGF zeta_at(const BigInt& q, std::uint64_t alpha, std::uint64_t beta);

/// Local generating function at a place with residue field size Q, to order N.
using LocalFamily = std::function<TruncatedSeries(const BigInt& residue_size, unsigned order)>;

/// prod_{n=1}^{N} local(q^n, floor(N/n))(X^n)^{b_n}, truncated at N.
TruncatedSeries euler_product(const LocalFamily& local, const BigInt& q, unsigned order);

TruncatedSeries euler_product(const LocalFamily& local, const PlaceTable& places, unsigned order);

}  // namespace ascgf
