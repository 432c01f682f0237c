#include "ascgf/verification.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "ascgf/conductor.hpp"
#include "ascgf/zeta.hpp"

namespace ascgf {

unsigned nu_min_form(std::uint64_t p, std::uint64_t num, std::uint64_t den) {
  unsigned j = 0;
  unsigned __int128 pj = 1;
  while (pj * den < num) {
    pj *= p;
    ++j;
  }
  return j;
}

unsigned nu_count_form(std::uint64_t p, std::uint64_t num, std::uint64_t den) {
  unsigned count = 0;
  for (unsigned __int128 pj = 1; pj * den < num; pj *= p) ++count;
  return count;
}

namespace {

unsigned checked_nu(std::uint64_t p, std::uint64_t num, std::uint64_t den) {
  const unsigned a = nu_min_form(p, num, den);
  const unsigned b = nu_count_form(p, num, den);
  if (a != b) throw std::logic_error("the two forms of nu disagree");
  return a;
}

// Additive order of every element, by repeated addition.
std::vector<std::uint64_t> element_orders(const ElementTable& t) {
  std::vector<std::uint64_t> out(t.size(), 1);
  for (std::size_t x = 1; x < t.size(); ++x) {
    std::size_t y = x;
    while (y != 0) {
      y = t.add(y, x);
      ++out[x];
    }
  }
  return out;
}

bool killed_by(std::uint64_t order, std::uint64_t p, unsigned a) {
  // order is a power of p, so order | p^a iff order <= p^a.
  std::uint64_t pa = 1;
  for (unsigned i = 0; i < a && pa < order; ++i) pa *= p;
  return order <= pa;
}

// Elements of G killed by p^a, per distinct a.
std::map<unsigned, std::vector<std::size_t>> kernels(const std::vector<std::uint64_t>& orders, std::uint64_t p,
                                                    const std::vector<unsigned>& exponents) {
  std::map<unsigned, std::vector<std::size_t>> out;
  for (unsigned a : exponents) {
    if (out.count(a)) continue;
    auto& list = out[a];
    for (std::size_t x = 0; x < orders.size(); ++x) {
      if (killed_by(orders[x], p, a)) list.push_back(x);
    }
  }
  return out;
}

// Calls visit(choice) for every tuple with choice[j] drawn from sets[j].
void for_each_tuple(const std::vector<const std::vector<std::size_t>*>& sets,
                    const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> pos(sets.size(), 0);
  std::vector<std::size_t> value(sets.size());
  for (std::size_t j = 0; j < sets.size(); ++j) value[j] = (*sets[j])[0];
  while (true) {
    visit(value);
    std::size_t j = 0;
    for (; j < sets.size(); ++j) {
      if (++pos[j] < sets[j]->size()) {
        value[j] = (*sets[j])[pos[j]];
        break;
      }
      pos[j] = 0;
      value[j] = (*sets[j])[0];
    }
    if (j == sets.size()) return;
  }
}

struct TupleSpace {
  UnitQuotient quotient;
  std::vector<std::uint64_t> orders;
  std::map<unsigned, std::vector<std::size_t>> kernel;
  std::vector<const std::vector<std::size_t>*> sets;
  // nu[k][j]: nu((k+1)/i_j) for generator j.
  std::vector<std::vector<unsigned>> nu;
};

TupleSpace tuple_space(const AbelianPGroup& g, const ElementTable& table, unsigned d, std::uint64_t max_jump,
                       std::uint64_t guard) {
  TupleSpace s{unit_quotient(g.prime(), d, max_jump), element_orders(table), {}, {}, {}};
  const CyclicFactors f = s.quotient.factors();
  s.kernel = kernels(s.orders, g.prime(), f.exponents);
  BigInt total = 1;
  for (unsigned a : f.exponents) {
    s.sets.push_back(&s.kernel.at(a));
    total *= static_cast<unsigned long>(s.kernel.at(a).size());
  }
  if (total > BigInt(static_cast<unsigned long>(guard))) {
    throw BoundExceeded("enumerating " + to_string(total) + " homomorphisms exceeds the guard of " +
                        std::to_string(guard) + "; raise --guard or lower the jump bound");
  }
  for (std::uint64_t k = 0; k <= max_jump; ++k) {
    std::vector<unsigned> row;
    for (const auto& [i, level] : s.quotient.levels) {
      for (unsigned c = 0; c < d; ++c) row.push_back(nu_min_form(g.prime(), k + 1, i));
    }
    s.nu.push_back(std::move(row));
  }
  return s;
}

// Smallest k with p^{nu((k+1)/i)} g_j = 0 for every generator.
std::uint64_t last_jump(const TupleSpace& s, std::uint64_t p, const std::vector<std::size_t>& images) {
  for (std::uint64_t k = 0; k < s.nu.size(); ++k) {
    bool trivial = true;
    for (std::size_t j = 0; j < images.size() && trivial; ++j) trivial = killed_by(s.orders[images[j]], p, s.nu[k][j]);
    if (trivial) return k;
  }
  throw std::logic_error("homomorphism is non-trivial on the top of the quotient filtration");
}

std::string group_label(const AbelianPGroup& g) { return g.name() + " [" + g.spec() + "]"; }

}  // namespace

CyclicFactors UnitQuotient::factors() const {
  CyclicFactors f{p, {}};
  for (const auto& [i, level] : levels) {
    for (unsigned c = 0; c < d; ++c) f.exponents.push_back(level);
  }
  return f;
}

UnitQuotient unit_quotient(std::uint64_t p, unsigned d, std::uint64_t k, bool decreasing) {
  if (d == 0) throw std::invalid_argument("residue degree d must be at least 1");
  UnitQuotient u{p, d, k, {}};
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (i % p == 0) continue;
    u.levels.emplace_back(i, checked_nu(p, k + 1, i));
  }
  if (decreasing) std::reverse(u.levels.begin(), u.levels.end());
  return u;
}

BigInt hom_count_bruteforce(const CyclicFactors& a, const AbelianPGroup& g, std::uint64_t guard) {
  if (a.p != g.prime()) throw std::invalid_argument("source and target groups have different primes");
  const ElementTable table(g, guard);
  const BigInt work = BigInt(static_cast<unsigned long>(table.size())) * (a.exponents.size() + 1);
  if (work > BigInt(static_cast<unsigned long>(guard))) {
    throw BoundExceeded("brute-force enumeration needs " + to_string(work) + " element visits, above the guard of " +
                        std::to_string(guard));
  }
  const auto orders = element_orders(table);
  BigInt total = 1;
  for (unsigned exponent : a.exponents) {
    std::uint64_t killed = 0;
    for (std::size_t x = 0; x < table.size(); ++x) killed += killed_by(orders[x], g.prime(), exponent) ? 1 : 0;
    total *= static_cast<unsigned long>(killed);
  }
  return total;
}

std::vector<BigInt> last_jump_distribution_bruteforce(const AbelianPGroup& g, unsigned d, std::uint64_t max_jump,
                                                      std::uint64_t guard) {
  const ElementTable table(g, guard);
  const TupleSpace s = tuple_space(g, table, d, max_jump, guard);
  std::vector<std::uint64_t> counts(max_jump + 1, 0);
  if (s.sets.empty()) {
    counts[0] = 1;
  } else {
    for_each_tuple(s.sets, [&](const std::vector<std::size_t>& images) { ++counts[last_jump(s, g.prime(), images)]; });
  }
  std::vector<BigInt> out;
  for (auto c : counts) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

std::map<std::vector<std::uint64_t>, BigInt> jump_profile_bruteforce(std::uint64_t p, unsigned e, unsigned d,
                                                                     std::uint64_t max_jump, std::uint64_t guard) {
  const AbelianPGroup g = AbelianPGroup::cyclic(p, e);
  const ElementTable table(g, guard);
  const TupleSpace s = tuple_space(g, table, d, max_jump, guard);

  // times_p[x] = p x by repeated addition.
  std::vector<std::size_t> times_p(table.size());
  for (std::size_t x = 0; x < table.size(); ++x) {
    std::size_t y = 0;
    for (std::uint64_t c = 0; c < p; ++c) y = table.add(y, x);
    times_p[x] = y;
  }

  std::map<std::vector<std::uint64_t>, std::uint64_t> counts;
  auto visit = [&](const std::vector<std::size_t>& images) {
    std::vector<std::uint64_t> jumps;
    std::vector<std::size_t> current = images;
    for (unsigned m = 0; m < e; ++m) {
      jumps.push_back(last_jump(s, p, current));
      for (auto& x : current) x = times_p[x];
    }
    std::vector<std::uint64_t> exponents(e);
    for (unsigned m = 0; m + 1 < e; ++m) exponents[m] = jumps[m] - p * jumps[m + 1];
    exponents[e - 1] = jumps[e - 1];
    ++counts[exponents];
  };
  if (s.sets.empty()) {
    counts[std::vector<std::uint64_t>(e, 0)] = 1;
  } else {
    for_each_tuple(s.sets, visit);
  }
  std::map<std::vector<std::uint64_t>, BigInt> out;
  for (const auto& [key, c] : counts) out.emplace(key, BigInt(static_cast<unsigned long>(c)));
  return out;
}

// ---------------------------------------------------------------------------

Verdict closed_form_vs_euler(const AbelianPGroup& g, const BigInt& q, unsigned order) {
  const TruncatedSeries closed = global_asc_gf(g, q).expand(order);
  const TruncatedSeries euler = global_asc_euler_series(g, q, order);
  Verdict v{"global", "closed form vs Euler product, " + group_label(g) + ", q=" + to_string(q) + ", N=" +
                          std::to_string(order),
            false, first_mismatch(closed, euler), ""};
  v.passed = !v.first_mismatch;
  if (v.first_mismatch) {
    v.detail = "coefficient " + std::to_string(*v.first_mismatch) + ": closed form " +
               to_string(closed[*v.first_mismatch]) + ", Euler product " + to_string(euler[*v.first_mismatch]);
  }
  return v;
}

std::vector<AbelianPGroup> groups_up_to(std::uint64_t p, unsigned max_log) {
  std::vector<AbelianPGroup> out;
  std::vector<unsigned> parts;
  // Partitions with parts in non-increasing order.
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned largest) {
    out.push_back(AbelianPGroup::from_factor_exponents(p, parts));
    for (unsigned a = std::min(remaining, largest); a >= 1; --a) {
      parts.push_back(a);
      rec(remaining - a, a);
      parts.pop_back();
    }
  };
  rec(max_log, max_log);
  std::sort(out.begin(), out.end(), [](const AbelianPGroup& a, const AbelianPGroup& b) {
    if (a.order_log() != b.order_log()) return a.order_log() < b.order_log();
    return a.multiplicities() < b.multiplicities();
  });
  return out;
}

std::vector<AbelianPGroup> standard_test_groups() {
  return {AbelianPGroup::parse("p=2;m=1"),   AbelianPGroup::parse("p=2;m=0,1"), AbelianPGroup::parse("p=2;m=2"),
          AbelianPGroup::parse("p=2;m=1,1"), AbelianPGroup::parse("p=2;m=0,0,1"), AbelianPGroup::parse("p=3;m=1"),
          AbelianPGroup::parse("p=3;m=0,1"), AbelianPGroup::parse("p=3;m=2"),   AbelianPGroup::parse("p=3;m=1,1"),
          AbelianPGroup::parse("p=3;m=0,0,1")};
}

bool SuiteReport::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed; });
}

namespace {

void zeta_suite(std::vector<Verdict>& out) {
  const unsigned N = 30;
  for (int q : {2, 3, 4, 5, 8, 9}) {
    Verdict v{"zeta", "zeta identity, q=" + std::to_string(q) + ", N=" + std::to_string(N), false, {}, ""};
    try {
      const PlaceTable places = place_counts(q, N);
      TruncatedSeries product = TruncatedSeries::one(N);
      for (unsigned n = 1; n <= N; ++n) {
        product *= substitute(pow_series(expand_factor(1, 1, 1, N / n), -places.count(n)), n, N);
      }
      v.first_mismatch = first_mismatch(product, zeta_factored(q).expand(N));
      v.passed = !v.first_mismatch;
    } catch (const std::exception& e) {
      v.detail = e.what();
    }
    out.push_back(std::move(v));
  }
}

void local_suite(std::vector<Verdict>& out, const SuiteOptions& options) {
  for (std::uint64_t p : {2, 3}) {
    for (unsigned d : {1U, 2U}) {
      const BigInt Q = ipow(BigInt(static_cast<unsigned long>(p)), d);
      for (const auto& g : groups_up_to(p, 4)) {
        Verdict v{"local", "element-level hom counts, " + group_label(g) + ", Q=" + to_string(Q) + ", k<=12", true, {},
                  ""};
        for (std::uint64_t k = 0; k <= 12 && v.passed; ++k) {
          const BigInt expected = ipow(Q, tau(g, k));
          for (bool decreasing : {false, true}) {
            const BigInt got = hom_count_bruteforce(unit_quotient(p, d, k, decreasing).factors(), g, options.guard);
            if (got != expected) {
              v.passed = false;
              v.detail = "k=" + std::to_string(k) + (decreasing ? " (decreasing order)" : "") + ": enumerated " +
                         to_string(got) + ", expected Q^tau = " + to_string(expected);
              break;
            }
          }
        }
        out.push_back(std::move(v));
      }
    }
  }

  // Full enumeration of homomorphisms, sorted by last jump.
  struct Case {
    const char* spec;
    unsigned d;
    unsigned max_jump;
  };
  for (const Case& c : {Case{"p=2;m=1", 1, 10}, Case{"p=2;m=0,1", 1, 7}, Case{"p=2;m=2", 1, 6}, Case{"p=2;m=1", 2, 5},
                        Case{"p=3;m=1", 1, 8}, Case{"p=3;m=0,1", 1, 6}, Case{"p=3;m=1", 2, 3}}) {
    const AbelianPGroup g = AbelianPGroup::parse(c.spec);
    const BigInt Q = ipow(BigInt(static_cast<unsigned long>(g.prime())), c.d);
    Verdict v{"local", "last-jump distribution, " + group_label(g) + ", Q=" + to_string(Q) + ", k<=" +
                           std::to_string(c.max_jump),
              false, {}, ""};
    try {
      const auto counts = last_jump_distribution_bruteforce(g, c.d, c.max_jump, options.guard);
      const TruncatedSeries local = local_asc_gf(g, Q).expand(c.max_jump);
      TruncatedSeries enumerated(c.max_jump);
      for (unsigned k = 0; k <= c.max_jump; ++k) enumerated[k] = Rational(counts[k]);
      v.first_mismatch = first_mismatch(enumerated, local);
      v.passed = !v.first_mismatch;
    } catch (const std::exception& e) {
      v.detail = e.what();
    }
    out.push_back(std::move(v));
  }

  // Jump profiles of C_{p^e} against the multivariate expansion.
  struct JumpCase {
    std::uint64_t p;
    unsigned e;
    unsigned max_jump;
  };
  for (const JumpCase& c : {JumpCase{2, 2, 8}, JumpCase{2, 3, 8}, JumpCase{3, 2, 7}}) {
    const BigInt Q = c.p;
    Verdict v{"local", "jump profiles, C" + std::to_string(c.p) + "^" + std::to_string(c.e) + ", Q=" + to_string(Q) +
                           ", j_0<=" + std::to_string(c.max_jump),
              true, {}, ""};
    try {
      const auto counts = jump_profile_bruteforce(c.p, c.e, 1, c.max_jump, options.guard);
      const MultivariateSeries series = jump_local_gf(c.p, c.e, Q).expand(c.max_jump);
      for (const auto& [exponents, coeff] : series.terms()) {
        const auto it = counts.find(exponents);
        const BigInt got = it == counts.end() ? BigInt(0) : it->second;
        if (Rational(got) != coeff) v.passed = false;
      }
      for (const auto& [exponents, got] : counts) {
        if (series.coefficient(exponents) != Rational(got)) v.passed = false;
      }
      if (!v.passed) v.detail = "enumerated jump profiles differ from the multivariate expansion";
    } catch (const std::exception& e) {
      v.passed = false;
      v.detail = e.what();
    }
    out.push_back(std::move(v));
  }
}

void global_suite(std::vector<Verdict>& out, const SuiteOptions& options) {
  for (const auto& g : standard_test_groups()) {
    const BigInt p = static_cast<unsigned long>(g.prime());
    for (const BigInt& q : {p, BigInt(p * p)}) out.push_back(closed_form_vs_euler(g, q, options.order));
  }
  const unsigned N = 10;
  for (std::uint64_t p : {2, 3}) {
    for (unsigned e = 1; e <= 3; ++e) {
      const BigInt q = static_cast<unsigned long>(p);
      Verdict v{"global", "specialized jump Euler product, C" + std::to_string(p) + "^" + std::to_string(e) + ", q=" +
                              to_string(q) + ", N=" + std::to_string(N),
                false, {}, ""};
      v.first_mismatch =
          first_mismatch(jump_global_series(p, e, q, N), global_asc_gf(AbelianPGroup::cyclic(p, e), q).expand(N));
      v.passed = !v.first_mismatch;
      out.push_back(std::move(v));
    }
  }
}

}  // namespace

SuiteReport run_suite(const std::string& suite, const SuiteOptions& options) {
  if (suite != "all" && suite != "local" && suite != "global" && suite != "zeta") {
    throw std::invalid_argument("unknown suite '" + suite + "' (expected all, local, global or zeta)");
  }
  SuiteReport report{suite, {}};
  if (suite == "all" || suite == "zeta") zeta_suite(report.verdicts);
  if (suite == "all" || suite == "local") local_suite(report.verdicts, options);
  if (suite == "all" || suite == "global") global_suite(report.verdicts, options);
  return report;
}

}  // namespace ascgf
