#include "ascgf/abelian_group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ascgf {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

template <typename T>
bool parse_uint(std::string_view s, T& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

[[noreturn]] void bad_spec(std::string_view spec, const std::string& why) {
  throw std::invalid_argument("malformed group spec '" + std::string(spec) + "': " + why +
                              " (expected p=<prime>;m=<comma-separated multiplicities>, e.g. p=3;m=1,0,2)");
}

// floor(k / p^e) without overflowing p^e.
std::uint64_t floor_div_pow(std::uint64_t k, std::uint64_t p, unsigned e) {
  std::uint64_t pe = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (pe > k / p) return 0;
    pe *= p;
  }
  return k / pe;
}

}  // namespace

AbelianPGroup::AbelianPGroup(std::uint64_t p, std::vector<unsigned> multiplicities)
    : p_(p), m_(std::move(multiplicities)) {
  if (!is_prime(p_)) throw std::invalid_argument("p = " + std::to_string(p_) + " is not prime");
  while (!m_.empty() && m_.back() == 0) m_.pop_back();
}

AbelianPGroup AbelianPGroup::cyclic(std::uint64_t p, unsigned e) { return cyclic_power(p, e, 1); }

AbelianPGroup AbelianPGroup::cyclic_power(std::uint64_t p, unsigned e, unsigned r) {
  if (e == 0) return trivial(p);
  std::vector<unsigned> m(e, 0);
  m[e - 1] = r;
  return {p, std::move(m)};
}

AbelianPGroup AbelianPGroup::from_factor_exponents(std::uint64_t p, const std::vector<unsigned>& exponents) {
  std::vector<unsigned> m;
  for (unsigned a : exponents) {
    if (a == 0) continue;
    if (m.size() < a) m.resize(a, 0);
    ++m[a - 1];
  }
  return {p, std::move(m)};
}

AbelianPGroup AbelianPGroup::parse(std::string_view spec) {
  const auto semi = spec.find(';');
  if (semi == std::string_view::npos) bad_spec(spec, "missing ';'");
  const auto lhs = trim(spec.substr(0, semi));
  const auto rhs = trim(spec.substr(semi + 1));
  if (lhs.substr(0, 2) != "p=") bad_spec(spec, "first field must be p=<prime>");
  if (rhs.substr(0, 2) != "m=") bad_spec(spec, "second field must be m=<list>");
  std::uint64_t p = 0;
  if (!parse_uint(lhs.substr(2), p)) bad_spec(spec, "p is not a non-negative integer");
  if (!is_prime(p)) bad_spec(spec, "p = " + std::to_string(p) + " is not prime");
  std::vector<unsigned> m;
  auto list = trim(rhs.substr(2));
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto item = list.substr(0, comma);
    unsigned value = 0;
    if (!parse_uint(item, value)) bad_spec(spec, "multiplicity '" + std::string(trim(item)) + "' is not a non-negative integer");
    m.push_back(value);
    if (comma == std::string_view::npos) break;
    list = list.substr(comma + 1);
    if (trim(list).empty()) bad_spec(spec, "trailing ','");
  }
  return {p, std::move(m)};
}

unsigned AbelianPGroup::multiplicity(unsigned e) const {
  if (e == 0 || e > m_.size()) return 0;
  return m_[e - 1];
}

unsigned AbelianPGroup::order_log() const {
  unsigned total = 0;
  for (std::size_t i = 0; i < m_.size(); ++i) total += static_cast<unsigned>(i + 1) * m_[i];
  return total;
}

unsigned AbelianPGroup::rank() const {
  unsigned total = 0;
  for (unsigned m : m_) total += m;
  return total;
}

BigInt AbelianPGroup::order() const { return ipow(BigInt(static_cast<unsigned long>(p_)), order_log()); }

std::vector<unsigned> AbelianPGroup::factor_exponents() const {
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < m_.size(); ++i) out.insert(out.end(), m_[i], static_cast<unsigned>(i + 1));
  return out;
}

std::string AbelianPGroup::spec() const {
  std::ostringstream os;
  os << "p=" << p_ << ";m=";
  for (std::size_t i = 0; i < m_.size(); ++i) os << (i ? "," : "") << m_[i];
  return os.str();
}

std::string AbelianPGroup::name() const {
  if (is_trivial()) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (m_[i] == 0) continue;
    if (!first) os << " x ";
    first = false;
    os << 'C' << ipow(BigInt(static_cast<unsigned long>(p_)), i + 1);
    if (m_[i] > 1) os << '^' << m_[i];
  }
  return os.str();
}

InvariantSequence invariant_sequence(const AbelianPGroup& g) {
  InvariantSequence out;
  const unsigned t = g.exponent_log();
  const auto p = static_cast<unsigned long>(g.prime());
  out.c.emplace_back(0);
  if (t == 0) {
    out.a = 0;
    out.a_prime = 1;
    return out;
  }
  out.c.emplace_back(g.rank());
  for (unsigned i = 1; i <= t; ++i) {
    out.c.push_back(out.c.back() - make_rational(g.multiplicity(i), ipow(BigInt(p), i)));
  }
  for (unsigned i = 1; i <= t; ++i) {
    // r_i = log_p |G[p^i]| - log_p |G[p^{i-1}]|.
    const auto hi = log_exact(torsion_size(g, i), p);
    const auto lo = log_exact(torsion_size(g, i - 1), p);
    out.r.push_back(static_cast<unsigned>(*hi - *lo));
  }
  out.a = out.c.back();
  out.a_prime = 1 + g.rank();
  return out;
}

BigInt torsion_size(const AbelianPGroup& g, unsigned r) {
  unsigned long exponent = 0;
  for (unsigned e = 1; e <= g.exponent_log(); ++e) exponent += g.multiplicity(e) * std::min(e, r);
  return ipow(BigInt(static_cast<unsigned long>(g.prime())), exponent);
}

std::uint64_t tau(const AbelianPGroup& g, std::uint64_t k) {
  std::uint64_t total = 0;
  for (unsigned e = 1; e <= g.exponent_log(); ++e) {
    total += g.multiplicity(e) * (k - floor_div_pow(k, g.prime(), e));
  }
  return total;
}

BigInt hom_count(const CyclicFactors& a, const AbelianPGroup& g) {
  if (a.p != g.prime()) {
    throw std::invalid_argument("hom_count: source is a " + std::to_string(a.p) + "-group but target is a " +
                                std::to_string(g.prime()) + "-group");
  }
  BigInt total = 1;
  for (unsigned exponent : a.exponents) total *= torsion_size(g, exponent);
  return total;
}

// ---------------------------------------------------------------------------

ElementTable::ElementTable(const AbelianPGroup& g, std::uint64_t max_elements) {
  const BigInt order = g.order();
  if (order > BigInt(static_cast<unsigned long>(max_elements))) {
    throw BoundExceeded("group " + g.name() + " has " + to_string(order) + " elements, above the limit of " +
                        std::to_string(max_elements));
  }
  for (unsigned e : g.factor_exponents()) moduli_.push_back(to_u64(ipow(BigInt(static_cast<unsigned long>(g.prime())), e)));
  size_ = to_u64(order);
  const std::size_t r = moduli_.size();
  coords_.resize(size_ * r);
  for (std::size_t idx = 0; idx < size_; ++idx) {
    std::size_t rest = idx;
    for (std::size_t j = 0; j < r; ++j) {
      coords_[idx * r + j] = rest % moduli_[j];
      rest /= moduli_[j];
    }
  }
}

std::size_t ElementTable::index_of(const std::vector<std::uint64_t>& coords) const {
  std::size_t idx = 0;
  for (std::size_t j = moduli_.size(); j-- > 0;) idx = idx * moduli_[j] + coords[j];
  return idx;
}

std::size_t ElementTable::add(std::size_t a, std::size_t b) const {
  std::size_t idx = 0;
  for (std::size_t j = moduli_.size(); j-- > 0;) {
    idx = idx * moduli_[j] + (coord(a, j) + coord(b, j)) % moduli_[j];
  }
  return idx;
}

std::size_t ElementTable::negate(std::size_t a) const {
  std::size_t idx = 0;
  for (std::size_t j = moduli_.size(); j-- > 0;) {
    idx = idx * moduli_[j] + (moduli_[j] - coord(a, j)) % moduli_[j];
  }
  return idx;
}

// ---------------------------------------------------------------------------

namespace {

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }

bool is_subset(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if ((a[w] & ~b[w]) != 0) return false;
  }
  return true;
}

std::vector<std::size_t> members_of(const Bits& b, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (test_bit(b, i)) out.push_back(i);
  }
  return out;
}

// Isomorphism type from the sizes of the p^r-torsion of the member set.
AbelianPGroup subgroup_type(const ElementTable& table, const std::vector<std::size_t>& members, std::uint64_t p,
                            unsigned max_e) {
  std::vector<unsigned> torsion_log(max_e + 1, 0);
  for (unsigned r = 1; r <= max_e; ++r) {
    std::size_t count = 0;
    for (std::size_t h : members) {
      bool killed = true;
      for (std::size_t j = 0; j < table.rank() && killed; ++j) {
        std::uint64_t pr = 1;
        for (unsigned i = 0; i < r; ++i) pr *= p;
        killed = (table.coord(h, j) * pr) % table.moduli()[j] == 0;
      }
      if (killed) ++count;
    }
    torsion_log[r] = static_cast<unsigned>(*log_exact(BigInt(static_cast<unsigned long>(count)), p));
  }
  std::vector<unsigned> r_seq(max_e + 2, 0);
  for (unsigned i = 1; i <= max_e; ++i) r_seq[i] = torsion_log[i] - torsion_log[i - 1];
  std::vector<unsigned> m(max_e, 0);
  for (unsigned e = 1; e <= max_e; ++e) m[e - 1] = r_seq[e] - r_seq[e + 1];
  return {p, std::move(m)};
}

}  // namespace

SubgroupLattice::SubgroupLattice(const AbelianPGroup& g, const LatticeOptions& options) : ambient_(g) {
  const std::uint64_t bound =
      options.max_order != 0 ? options.max_order : to_u64(ipow(BigInt(static_cast<unsigned long>(g.prime())), 6));
  if (g.order() > BigInt(static_cast<unsigned long>(bound))) {
    throw BoundExceeded("subgroup lattice of " + g.name() + " (order " + to_string(g.order()) +
                        ") exceeds the lattice bound |G| <= " + std::to_string(bound) +
                        "; raise --lattice-bound to enumerate it");
  }
  const ElementTable table(g, bound);
  const std::size_t n = table.size();
  const std::size_t words = (n + 63) / 64;

  std::set<Bits> seen;
  std::deque<Bits> queue;
  Bits trivial(words, 0);
  set_bit(trivial, 0);
  seen.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    const Bits h = std::move(queue.front());
    queue.pop_front();
    const auto h_members = members_of(h, n);
    for (std::size_t x = 0; x < n; ++x) {
      if (test_bit(h, x)) continue;
      // <H, x> is the union of the cosets H + k x.
      Bits joined = h;
      std::size_t multiple = x;
      while (!test_bit(h, multiple)) {
        for (std::size_t m : h_members) set_bit(joined, table.add(m, multiple));
        multiple = table.add(multiple, x);
      }
      if (seen.insert(joined).second) {
        if (seen.size() > options.max_subgroups) {
          throw BoundExceeded("subgroup lattice of " + g.name() + " has more than " +
                              std::to_string(options.max_subgroups) + " subgroups");
        }
        queue.push_back(std::move(joined));
      }
    }
  }

  for (const Bits& b : seen) {
    Subgroup s;
    s.members = b;
    const auto members = members_of(b, n);
    s.order = members.size();
    s.type = subgroup_type(table, members, g.prime(), g.exponent_log());
    subgroups_.push_back(std::move(s));
  }
  std::stable_sort(subgroups_.begin(), subgroups_.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.order < b.order; });

  const std::size_t count = subgroups_.size();
  moebius_.assign(count, 0);
  moebius_[count - 1] = 1;
  for (std::size_t i = count - 1; i-- > 0;) {
    long sum = 0;
    for (std::size_t j = i + 1; j < count; ++j) {
      if (subgroups_[j].order > subgroups_[i].order && is_subset(subgroups_[i].members, subgroups_[j].members)) {
        sum += moebius_[j];
      }
    }
    moebius_[i] = -sum;
  }
}

bool SubgroupLattice::is_subgroup_of(std::size_t i, std::size_t j) const {
  return is_subset(subgroups_[i].members, subgroups_[j].members);
}

SubgroupLattice subgroup_lattice(const AbelianPGroup& g, const LatticeOptions& options) {
  return SubgroupLattice(g, options);
}

}  // namespace ascgf
