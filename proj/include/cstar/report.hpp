#pragma once

// JSON and DOT rendering of analysis results. Keys are sorted (nlohmann's
// default object is an ordered map), rationals are "p/q" strings unless
// integral, so identical inputs give byte-identical output.

#include "cstar/realization.hpp"
#include "cstar/rhaction.hpp"
#include "cstar/toricaction.hpp"

#include <json.hpp>

#include <string>

namespace cstar {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Rational& q);
Json to_json(const RationalVector& v);
Json to_json(const std::vector<RationalVector>& vs);

Json to_json(const ActionReport& r);
Json to_json(const OrbitGraph& g, const ActionReport& r);
Json to_json(const ChamberReport& c);
Json to_json(const BirationalSummary& s);
Json to_json(const BispecialType& t);
Json to_json(const CurveClassTable& t);
Json to_json(const ConeBundle& b);
Json to_json(const ChamberCheckReport& r);
Json to_json(const ContractionVerdict& v);

/// {schema_version, command, inputs, payload}.
Json envelope(const std::string& command, Json inputs, Json payload);

/// One node per fixed point labeled "level:multiplicity:dim", clustered by
/// component; edges run from higher to lower level, labeled by degree.
std::string to_dot(const OrbitGraph& g, const ActionReport& r, const std::string& title);

}  // namespace cstar
