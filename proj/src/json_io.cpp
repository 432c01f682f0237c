#include "ascgf/json_io.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ascgf {

namespace {

Json strings(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string fixed(double x) {
  std::ostringstream out;
  out << std::setprecision(12) << x;
  return out.str();
}

}  // namespace

Json to_json(const AbelianPGroup& g) {
  return Json{{"spec", g.spec()}, {"name", g.name()}, {"order", to_string(g.order())}};
}

Json to_json(const FactoredGF& f) {
  Json factors = Json::array();
  for (const auto& [key, e] : f.factors()) factors.push_back({{"alpha", key.alpha}, {"beta", key.beta}, {"exp", e}});
  return Json{{"q", to_string(f.base())}, {"factors", factors}, {"symbolic", f.symbolic()}};
}

Json to_json(const TruncatedSeries& s) {
  return Json{{"N", s.order()}, {"coefficients", strings(s.coefficients())}};
}

Json to_json(const Polynomial& p) { return strings(p.coefficients()); }

Json to_json(const RationalGF& f) {
  return Json{{"poly", to_json(f.poly())}, {"factored", to_json(f.factored())}, {"symbolic", f.symbolic()}};
}

Json to_json(const SpectrumEntry& e) {
  return Json{{"radius_exponent", to_string(e.radius_exponent)},
              {"cyclotomic_index", e.cyclotomic_index},
              {"points", e.points},
              {"order", e.order},
              {"kind", e.order > 0 ? "pole" : "zero"}};
}

Json to_json(const PoleReport& r) {
  Json j{{"radius_exponent", to_string(r.radius_exponent)}, {"points", r.points}, {"multiplicity", r.multiplicity}};
  j["location"] = r.location ? Json(to_string(*r.location)) : Json(nullptr);
  j["leading_constant"] = r.leading_constant ? Json(to_string(*r.leading_constant)) : Json(nullptr);
  return j;
}

Json to_json(const Verdict& v) {
  Json j{{"suite", v.suite}, {"name", v.name}, {"passed", v.passed}};
  j["first_mismatch"] = v.first_mismatch ? Json(*v.first_mismatch) : Json(nullptr);
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

Json to_json(const SuiteReport& r) {
  Json verdicts = Json::array();
  std::size_t failed = 0;
  for (const auto& v : r.verdicts) {
    verdicts.push_back(to_json(v));
    failed += v.passed ? 0 : 1;
  }
  return Json{{"suite", r.suite},
              {"passed", r.passed()},
              {"cases", r.verdicts.size()},
              {"failed", failed},
              {"verdicts", verdicts}};
}

Json to_json(const PlaceTable& t) {
  Json counts = Json::array();
  for (unsigned n = 1; n <= t.order(); ++n) counts.push_back({{"degree", n}, {"count", to_string(t.count(n))}});
  return Json{{"q", to_string(t.q())}, {"N", t.order()}, {"places", counts}};
}

Json to_json(const AccumulationReport& r) {
  Json rows = Json::array();
  for (const auto& a : r.approximants) {
    Json outer = Json::array();
    Json inner = Json::array();
    for (const auto& s : a.outer_radii) outer.push_back(to_string(s));
    for (const auto& s : a.inner_radii) inner.push_back(to_string(s));
    Json row{{"A", a.depth},
             {"new_radius_exponent", to_string(a.new_radius_exponent)},
             {"numeric_radius", a.numeric_radius},
             {"limit", r.limit},
             {"new_radius_kind", a.new_radius_is_pole ? "pole" : "zero"},
             {"new_radius_in_net_spectrum", a.new_radius_in_spectrum},
             {"outer_radii", outer},
             {"inner_radii", inner},
             {"zeta_ratio", to_json(a.zeta_ratio)},
             {"euler_product_matches", a.euler_matches},
             {"match_order", a.match_order},
             {"quotient_identity", a.quotient_identity},
             {"quotient_regular_inside", a.quotient_regular_inside}};
    row["growth_bound"] = a.growth_bound ? Json(*a.growth_bound) : Json(nullptr);
    rows.push_back(std::move(row));
  }
  Json roots = Json::array();
  for (const auto& c : r.roots) {
    roots.push_back({{"Q", to_string(c.residue_size)}, {"modulus", c.modulus}, {"expected", c.expected}, {"ok", c.ok}});
  }
  return Json{{"q", to_string(r.q)},
              {"order", r.order},
              {"limit", r.limit},
              {"approximants", rows},
              {"summary",
               {{"passed", r.passed()},
                {"radii_monotone", r.radii_monotone},
                {"fractions_reduced_distinct", r.fractions_reduced_distinct},
                {"quadratic_roots", roots}}}};
}

FactoredGF factored_from_json(const Json& j) {
  if (!j.contains("q") || !j.contains("factors")) throw std::invalid_argument("factored GF JSON needs q and factors");
  const Json& qj = j.at("q");
  const BigInt q = qj.is_string() ? BigInt(qj.get<std::string>()) : BigInt(qj.get<unsigned long>());
  FactoredGF f(q);
  for (const Json& factor : j.at("factors")) {
    f.mul_factor(factor.at("alpha").get<std::uint64_t>(), factor.at("beta").get<std::uint64_t>(),
                 factor.at("exp").get<long>());
  }
  return f;
}

void write_csv(std::ostream& out, const TruncatedSeries& s) {
  out << "n,coefficient\n";
  for (unsigned n = 0; n <= s.order(); ++n) out << n << ',' << to_string(s[n]) << '\n';
}

void write_csv(std::ostream& out, const FactoredGF& f) {
  out << "q,alpha,beta,exp\n";
  for (const auto& [key, e] : f.factors()) out << to_string(f.base()) << ',' << key.alpha << ',' << key.beta << ',' << e << '\n';
}

void write_csv(std::ostream& out, const std::vector<SpectrumEntry>& spectrum) {
  out << "radius_exponent,cyclotomic_index,points,order\n";
  for (const auto& e : spectrum) {
    out << to_string(e.radius_exponent) << ',' << e.cyclotomic_index << ',' << e.points << ',' << e.order << '\n';
  }
}

void write_csv(std::ostream& out, const PlaceTable& t) {
  out << "degree,count\n";
  for (unsigned n = 1; n <= t.order(); ++n) out << n << ',' << to_string(t.count(n)) << '\n';
}

void write_csv(std::ostream& out, const SuiteReport& r) {
  out << "suite,name,passed,first_mismatch,detail\n";
  for (const auto& v : r.verdicts) {
    out << v.suite << ',' << csv_field(v.name) << ',' << (v.passed ? "true" : "false") << ','
        << (v.first_mismatch ? std::to_string(*v.first_mismatch) : "") << ',' << csv_field(v.detail) << '\n';
  }
}

void write_csv(std::ostream& out, const AccumulationReport& r) {
  out << "A,new_radius_exponent,numeric_radius,limit\n";
  for (const auto& a : r.approximants) {
    out << a.depth << ',' << to_string(a.new_radius_exponent) << ',' << fixed(a.numeric_radius) << ',' << fixed(r.limit)
        << '\n';
  }
}

}  // namespace ascgf
