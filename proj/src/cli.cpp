#include "ascgf/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <optional>
#include <string>

#include "ascgf/asymptotics.hpp"
#include "ascgf/conductor.hpp"
#include "ascgf/field_counts.hpp"
#include "ascgf/json_io.hpp"
#include "ascgf/merom_demo.hpp"
#include "ascgf/verification.hpp"
#include "ascgf/zeta.hpp"

namespace ascgf {

namespace {

constexpr int kUsage = 1;
constexpr int kFailed = 2;

struct Settings {
  unsigned order = kDefaultOrder;
  bool order_given = false;
  std::uint64_t lattice_bound = 0;
  std::uint64_t guard = kDefaultGuard;
  bool csv = false;
};

struct Inputs {
  std::string group;
  std::string q;
  bool local = false;
};

BigInt parse_q(const std::string& text, const char* name = "q") {
  BigInt q;
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || q.set_str(text, 10) != 0 || q < 2) {
    throw std::invalid_argument(std::string("--") + name + " must be an integer >= 2, got '" + text + "'");
  }
  if (!as_prime_power(q)) throw std::invalid_argument(std::string("--") + name + " = " + text + " is not a prime power");
  return q;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json header(const AbelianPGroup& g, const BigInt& q, bool local) {
  return Json{{"group", to_json(g)}, {"scope", local ? "local" : "global"}, {local ? "Q" : "q", to_string(q)}};
}

// --- commands ---------------------------------------------------------------

int gf_asc(const Settings& s, const Inputs& in, std::ostream& out) {
  const auto g = AbelianPGroup::parse(in.group);
  const BigInt q = parse_q(in.q);
  const FactoredGF f = in.local ? local_asc_gf(g, q) : global_asc_gf(g, q);
  if (s.csv) {
    write_csv(out, f);
    return 0;
  }
  Json j = header(g, q, in.local);
  j["gf"] = to_json(f);
  j["series"] = to_json(f.expand(s.order));
  emit(out, j);
  return 0;
}

int gf_cond(const Settings& s, const Inputs& in, bool fit, unsigned fit_terms, std::ostream& out) {
  const auto g = AbelianPGroup::parse(in.group);
  const BigInt q = parse_q(in.q);
  if (in.local) {
    const RationalGF f = local_cond_gf(g, q);
    if (s.csv) {
      write_csv(out, f.expand(s.order));
      return 0;
    }
    Json j = header(g, q, true);
    j["gf"] = to_json(f);
    j["series"] = to_json(f.expand(s.order));
    emit(out, j);
    return 0;
  }
  if (!fit) {
    const TruncatedSeries series = global_cond_series(g, q, s.order);
    if (s.csv) {
      write_csv(out, series);
      return 0;
    }
    Json j = header(g, q, false);
    j["series"] = to_json(series);
    j["closed_form"] = nullptr;
    emit(out, j);
    return 0;
  }
  const unsigned verify = s.order_given ? s.order : 2 * fit_terms;
  const CondRationalityCheck check = fit_cond_rational(g, q, fit_terms, verify);
  if (s.csv) {
    write_csv(out, check.series);
    return check.verified() ? 0 : kFailed;
  }
  Json j = header(g, q, false);
  j["series"] = to_json(check.series);
  if (check.fit) {
    j["fit"] = {{"numerator", to_json(check.fit->numerator)},
                {"denominator", to_json(check.fit->denominator)},
                {"symbolic", "(" + check.fit->numerator.to_string() + ")/(" + check.fit->denominator.to_string() + ")"},
                {"fitted_terms", check.fit->fitted_terms},
                {"verified_through", check.series.order()}};
  } else {
    j["fit"] = nullptr;
  }
  j["verified"] = check.verified();
  j["first_mismatch"] = check.first_mismatch ? Json(*check.first_mismatch) : Json(nullptr);
  emit(out, j);
  return check.verified() ? 0 : kFailed;
}

int gf_disc(const Settings& s, const Inputs& in, std::ostream& out) {
  const auto g = AbelianPGroup::parse(in.group);
  const BigInt q = parse_q(in.q);
  const DiscSeries d = disc_series(g, q, s.order);
  if (s.csv) {
    write_csv(out, d.series);
    return 0;
  }
  Json j = header(g, q, false);
  j["series"] = to_json(d.series);
  j["conductor_multiplier"] = d.conductor_multiplier;
  j["general_prime_extension"] = d.general_prime_extension;
  emit(out, j);
  return 0;
}

int gf_jump(const Settings& s, const Inputs& in, std::ostream& out) {
  const auto g = AbelianPGroup::parse(in.group);
  if (!g.is_cyclic() || g.is_trivial()) {
    throw std::invalid_argument("jump generating functions need a non-trivial cyclic group, got " + g.name());
  }
  const unsigned e = g.exponent_log();
  const BigInt q = parse_q(in.q);
  if (in.local) {
    const JumpLocalGF jump = jump_local_gf(g.prime(), e, q);
    const MultivariateSeries series = jump.expand(s.order);
    const FactoredGF specialized = jump.specialized();
    const bool matches = specialized == local_asc_gf(g, q) && series.specialize() == local_asc_gf(g, q).expand(s.order);
    if (s.csv) {
      out << "exponents,coefficient\n";
      for (const auto& [exponents, c] : series.terms()) {
        std::string key;
        for (auto x : exponents) key += (key.empty() ? "" : " ") + std::to_string(x);
        out << key << ',' << to_string(c) << '\n';
      }
      return matches ? 0 : kFailed;
    }
    Json j = header(g, q, true);
    Json factors = Json::array();
    for (unsigned i = 0; i < e; ++i) factors.push_back(to_json(jump.variable_factor(i)));
    Json terms = Json::array();
    for (const auto& [exponents, c] : series.terms()) terms.push_back({{"exponents", exponents}, {"coefficient", to_string(c)}});
    j["weights"] = jump.weights();
    j["variable_factors"] = factors;
    j["bound"] = s.order;
    j["terms"] = terms;
    j["specialized"] = to_json(specialized);
    j["specialization_matches"] = matches;
    emit(out, j);
    return matches ? 0 : kFailed;
  }
  const TruncatedSeries series = jump_global_series(g.prime(), e, q, s.order);
  const bool matches = series == global_asc_gf(g, q).expand(s.order);
  if (s.csv) {
    write_csv(out, series);
    return matches ? 0 : kFailed;
  }
  Json j = header(g, q, false);
  j["series"] = to_json(series);
  j["matches_global_asc"] = matches;
  j["unspecialized_closed_form"] = "unknown";
  emit(out, j);
  return matches ? 0 : kFailed;
}

int count(const Settings& s, const Inputs& in, std::ostream& out) {
  const auto g = AbelianPGroup::parse(in.group);
  const BigInt q = parse_q(in.q);
  const TruncatedSeries series = (in.local ? local_asc_gf(g, q) : global_asc_gf(g, q)).expand(s.order);
  if (s.csv) {
    write_csv(out, series);
    return 0;
  }
  Json j = header(g, q, in.local);
  j["N"] = s.order;
  Json coeffs = Json::array();
  for (const BigInt& c : series.integer_coefficients()) coeffs.push_back(to_string(c));
  j["coefficients"] = coeffs;
  emit(out, j);
  return 0;
}

int asymptotics(const Settings& s, const Inputs& in, bool formula, std::ostream& out) {
  const auto g = AbelianPGroup::parse(in.group);
  const BigInt q = parse_q(in.q);
  const FactoredGF f = in.local ? local_asc_gf(g, q) : global_asc_gf(g, q);
  const auto spectrum = pole_spectrum(f);
  if (s.csv) {
    write_csv(out, spectrum);
    return 0;
  }
  const auto inv = invariant_sequence(g);
  Json j = header(g, q, in.local);
  j["a"] = to_string(inv.a);
  j["a_prime"] = inv.a_prime;
  Json entries = Json::array();
  for (const auto& e : spectrum) entries.push_back(to_json(e));
  j["spectrum"] = entries;
  if (g.is_trivial()) {
    j["innermost_pole"] = nullptr;
  } else {
    j["innermost_pole"] = to_json(innermost_pole(f));
    if (!in.local) j["leading_constant"] = to_string(leading_constant(g, q));
  }
  if (formula) {
    const CoefficientFormula cf = exact_coefficient_formula(f);
    const TruncatedSeries series = f.expand(s.order);
    bool matches = true;
    for (unsigned n = 0; n <= s.order; ++n) matches = matches && cf.coefficient(n) == series[n];
    j["formula"] = cf.describe();
    j["formula_matches_expansion"] = matches;
    j["N"] = s.order;
    emit(out, j);
    return matches ? 0 : kFailed;
  }
  emit(out, j);
  return 0;
}

int fields(const Settings& s, const Inputs& in, std::ostream& out) {
  const auto g = AbelianPGroup::parse(in.group);
  const BigInt q = parse_q(in.q);
  LatticeOptions options;
  options.max_order = s.lattice_bound;
  const FieldCounts counts = field_counts(g, q, s.order, options);
  if (s.csv) {
    write_csv(out, counts.series);
    return 0;
  }
  Json j = header(g, q, false);
  j["series"] = to_json(counts.series);
  Json terms = Json::array();
  for (const auto& t : counts.combination) {
    terms.push_back(
        {{"type", to_json(t.type)}, {"subgroups", t.subgroups}, {"weight", to_string(t.weight)}, {"gf", to_json(t.gf)}});
  }
  j["combination"] = terms;
  emit(out, j);
  return 0;
}

int verify(const Settings& s, const std::string& suite, std::ostream& out) {
  SuiteOptions options;
  if (s.order_given) options.order = s.order;
  options.guard = s.guard;
  const SuiteReport report = run_suite(suite, options);
  if (s.csv) {
    write_csv(out, report);
  } else {
    emit(out, to_json(report));
  }
  return report.passed() ? 0 : kFailed;
}

int demo(const Settings& s, const std::string& q_text, unsigned max_depth, bool growth, std::ostream& out) {
  const BigInt q = parse_q(q_text);
  AccumulationOptions options;
  options.order = s.order_given ? s.order : 20;
  options.growth_bound = growth;
  const AccumulationReport report = pole_accumulation_report(q, max_depth, options);
  if (s.csv) {
    write_csv(out, report);
  } else {
    emit(out, to_json(report));
  }
  return report.passed() ? 0 : kFailed;
}

int places(const Settings& s, const std::string& q_text, std::ostream& out) {
  const PlaceTable table = place_counts(parse_q(q_text), s.order);
  if (s.csv) {
    write_csv(out, table);
  } else {
    emit(out, to_json(table));
  }
  return 0;
}

void add_group(CLI::App* app, Inputs& in) {
  app->add_option("--group,-g", in.group, "Group spec p=<prime>;m=<m_1,...,m_E>")->required();
}

void add_q(CLI::App* app, std::string& q, const char* what = "Size q of the constant field") {
  app->add_option("--q,-q", q, what)->required();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generating functions for abelian p-group extensions of F_q(T) by Artin-Schreier conductor", "ascgf"};
  app.set_config("--config", "", "Read option defaults from a key=value file");
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_option("--order,-N", s.order, "Truncation order N")->capture_default_str();
  app.add_option("--lattice-bound", s.lattice_bound, "Largest |G| for subgroup enumeration (default p^6)");
  app.add_option("--guard", s.guard, "Work bound for brute-force enumeration")->capture_default_str();
  auto* csv = app.add_flag("--csv", s.csv, "CSV output");
  app.add_flag("--json", "JSON output (default)")->excludes(csv);

  Inputs in;
  std::function<int()> action;

  auto* gf = app.add_subcommand("gf", "Generating functions")->require_subcommand(1);
  auto* asc = gf->add_subcommand("asc", "Artin-Schreier conductor generating function");
  add_group(asc, in);
  add_q(asc, in.q, "Size q of the constant field (residue field size Q with --local)");
  asc->add_flag("--local", in.local, "Local function at a place with residue field size Q");
  asc->callback([&] { action = [&] { return gf_asc(s, in, out); }; });

  bool fit = false;
  unsigned fit_terms = 20;
  auto* cond = gf->add_subcommand("cond", "Conductor generating function");
  add_group(cond, in);
  add_q(cond, in.q, "Size q of the constant field (residue field size Q with --local)");
  cond->add_flag("--local", in.local, "Local closed form at residue field size Q");
  cond->add_flag("--fit", fit, "Fit a rational function to the global series and verify it");
  cond->add_option("--fit-terms", fit_terms, "Coefficients used for the fit")->capture_default_str();
  cond->callback([&] { action = [&] { return gf_cond(s, in, fit, fit_terms, out); }; });

  auto* disc = gf->add_subcommand("disc", "Discriminant series for cyclic groups of prime order");
  add_group(disc, in);
  add_q(disc, in.q);
  disc->callback([&] { action = [&] { return gf_disc(s, in, out); }; });

  auto* jump = gf->add_subcommand("jump", "Generating functions refined by all ramification jumps (cyclic groups)");
  add_group(jump, in);
  add_q(jump, in.q, "Size q of the constant field (residue field size Q with --local)");
  jump->add_flag("--local", in.local, "Multivariate local function at residue field size Q");
  jump->callback([&] { action = [&] { return gf_jump(s, in, out); }; });

  auto* cnt = app.add_subcommand("count", "Coefficients of the Artin-Schreier conductor generating function");
  add_group(cnt, in);
  add_q(cnt, in.q);
  cnt->add_flag("--local", in.local, "Local counts at residue field size Q");
  cnt->callback([&] { action = [&] { return count(s, in, out); }; });

  bool formula = false;
  auto* asy = app.add_subcommand("asymptotics", "Pole spectrum, innermost pole and leading constant");
  add_group(asy, in);
  add_q(asy, in.q);
  asy->add_flag("--local", in.local, "Analyse the local function at residue field size Q");
  asy->add_flag("--formula", formula, "Also derive the exact coefficient formula and check it to order N");
  asy->callback([&] { action = [&] { return asymptotics(s, in, formula, out); }; });

  auto* fld = app.add_subcommand("fields", "Counts of field extensions via Moebius inversion");
  add_group(fld, in);
  add_q(fld, in.q);
  fld->callback([&] { action = [&] { return fields(s, in, out); }; });

  std::string suite = "all";
  auto* ver = app.add_subcommand("verify", "Run the verification oracles");
  ver->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember({"all", "local", "global", "zeta"}))
      ->capture_default_str();
  ver->callback([&] { action = [&] { return verify(s, suite, out); }; });

  auto* dem = app.add_subcommand("demo", "Demonstrations")->require_subcommand(1);
  std::string demo_q = "3";
  unsigned a_max = 6;
  bool no_growth = false;
  auto* poles = dem->add_subcommand("c3-poles", "Pole radii of the C3 conductor approximants");
  poles->add_option("--q,-q", demo_q, "Size q of the constant field, a power of 3")->capture_default_str();
  poles->add_option("--a-max", a_max, "Largest approximation depth A")->capture_default_str();
  poles->add_flag("--no-growth", no_growth, "Skip the coefficient growth check");
  poles->callback([&] { action = [&] { return demo(s, demo_q, a_max, !no_growth, out); }; });

  std::string places_q;
  auto* plc = app.add_subcommand("places", "Number of places of F_q(T) of each degree");
  add_q(plc, places_q);
  plc->callback([&] { action = [&] { return places(s, places_q, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }
  s.order_given = app.get_option("--order")->count() > 0 || !app.get_option("--order")->empty();
  try {
    return action ? action() : kUsage;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace ascgf
