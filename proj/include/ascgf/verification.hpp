#pragma once

// Oracles that recount homomorphisms element by element on the finite
// quotients U^1/U^{k+1} of the local unit group, plus closed-form versus
// Euler-product comparisons. Nothing here calls tau or torsion_size.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ascgf/abelian_group.hpp"
#include "ascgf/series.hpp"

namespace ascgf {

/// nu(x) = min{j >= 0 : p^j >= x} for x = num/den.
unsigned nu_min_form(std::uint64_t p, std::uint64_t num, std::uint64_t den);
/// nu(x) = #{j >= 0 : p^j < x} for x = num/den.
unsigned nu_count_form(std::uint64_t p, std::uint64_t num, std::uint64_t den);

/// U^1/U^{k+1} = prod_{i <= k, p !| i} (Z/p^{nu((k+1)/i)})^d over a residue field of size p^d.
struct UnitQuotient {
  std::uint64_t p = 2;
  unsigned d = 1;
  std::uint64_t k = 0;
  /// (i, nu((k+1)/i)) in the chosen order of the index set.
  std::vector<std::pair<std::uint64_t, unsigned>> levels;

  /// Each level repeated d times.
  CyclicFactors factors() const;
  std::size_t rank() const { return levels.size() * d; }
};

/// Both forms of nu are computed and must agree (std::logic_error otherwise).
UnitQuotient unit_quotient(std::uint64_t p, unsigned d, std::uint64_t k, bool decreasing = false);

inline constexpr std::uint64_t kDefaultGuard = 1000000000;

/// prod_j #{g in G : p^{a_j} g = 0}, each set found by enumerating G and
/// testing by repeated addition. The guard bounds the enumeration work
/// (group elements visited); throws BoundExceeded above it.
BigInt hom_count_bruteforce(const CyclicFactors& a, const AbelianPGroup& g, std::uint64_t guard = kDefaultGuard);

/// Number of homomorphisms U^1 -> G with last jump exactly k, for k = 0..K,
/// by enumerating every homomorphism from U^1/U^{K+1}. The guard bounds the
/// number of homomorphisms.
std::vector<BigInt> last_jump_distribution_bruteforce(const AbelianPGroup& g, unsigned d, std::uint64_t max_jump,
                                                      std::uint64_t guard = kDefaultGuard);

/// For G = C_{p^e}: counts of homomorphisms by exponent vector
/// (j_0 - p j_1, ..., j_{e-2} - p j_{e-1}, j_{e-1}), j_m the last jump of p^m phi,
/// over all phi with j_0 <= K.
std::map<std::vector<std::uint64_t>, BigInt> jump_profile_bruteforce(std::uint64_t p, unsigned e, unsigned d,
                                                                     std::uint64_t max_jump,
                                                                     std::uint64_t guard = kDefaultGuard);

struct Verdict {
  std::string suite;
  std::string name;
  bool passed = false;
  std::optional<unsigned> first_mismatch;
  std::string detail;
};

/// expand(global_asc_gf) against the Euler product of local_asc_gf.
Verdict closed_form_vs_euler(const AbelianPGroup& g, const BigInt& q, unsigned order);

/// Every group of order p^n, n <= max_log.
std::vector<AbelianPGroup> groups_up_to(std::uint64_t p, unsigned max_log);

/// C_2, C_4, C_2^2, C_2 x C_4, C_8, C_3, C_9, C_3^2, C_3 x C_9, C_27.
std::vector<AbelianPGroup> standard_test_groups();

struct SuiteOptions {
  unsigned order = 15;
  std::uint64_t guard = kDefaultGuard;
};

struct SuiteReport {
  std::string suite;
  std::vector<Verdict> verdicts;
  bool passed() const;
};

/// suite is one of all, local, global, zeta; throws std::invalid_argument otherwise.
SuiteReport run_suite(const std::string& suite, const SuiteOptions& options = {});

}  // namespace ascgf
