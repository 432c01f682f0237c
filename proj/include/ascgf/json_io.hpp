#pragma once

// Machine-readable forms. Exact values (q, coefficients, counts, rationals)
// are decimal strings; small structural integers (alpha, beta, exp, N,
// degrees) are JSON integers.

#include <ostream>
#include <vector>

#include <json.hpp>

#include "ascgf/abelian_group.hpp"
#include "ascgf/asymptotics.hpp"
#include "ascgf/field_counts.hpp"
#include "ascgf/merom_demo.hpp"
#include "ascgf/series.hpp"
#include "ascgf/verification.hpp"
#include "ascgf/zeta.hpp"

namespace ascgf {

using Json = nlohmann::ordered_json;

Json to_json(const AbelianPGroup& g);
Json to_json(const FactoredGF& f);
Json to_json(const TruncatedSeries& s);
Json to_json(const Polynomial& p);
Json to_json(const RationalGF& f);
Json to_json(const SpectrumEntry& e);
Json to_json(const PoleReport& r);
Json to_json(const Verdict& v);
Json to_json(const SuiteReport& r);
Json to_json(const PlaceTable& t);
Json to_json(const AccumulationReport& r);

/// Inverse of to_json(FactoredGF); q may be a string or an integer.
FactoredGF factored_from_json(const Json& j);

void write_csv(std::ostream& out, const TruncatedSeries& s);
void write_csv(std::ostream& out, const FactoredGF& f);
void write_csv(std::ostream& out, const std::vector<SpectrumEntry>& spectrum);
void write_csv(std::ostream& out, const PlaceTable& t);
void write_csv(std::ostream& out, const SuiteReport& r);
/// A, new_radius_exponent, numeric_radius, limit.
void write_csv(std::ostream& out, const AccumulationReport& r);

}  // namespace ascgf
