#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "tiltwall/counting.hpp"
#include "tiltwall/first_wall.hpp"
#include "tiltwall/modular.hpp"
#include "tiltwall/qseries.hpp"

namespace tiltwall {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

/// Exact "p/q" strings by default; fixed-point with `decimal` digits when set.
struct RenderOptions {
  std::optional<int> decimal;
};

Json to_json(const Rational& v, const RenderOptions& r = {});
Json to_json(const Surd& v, const RenderOptions& r = {});
Json to_json(const FirstWallReport& rep, const RenderOptions& r = {});
Json to_json(const QSeries& s, const RenderOptions& r = {});
Json to_json(const Charge& c, const RenderOptions& r = {});
Json to_json(const CurveCharge& cc, const RenderOptions& r = {});
Json to_json(const ComplexMatrix& M);

/// Inverses of the exact renderings.
Rational rational_from_json(const Json& j);
Surd surd_from_json(const Json& j);
FirstWallReport first_wall_from_json(const Json& j);
QSeries qseries_from_json(const Json& j);

Json provenance(const std::string& command, const std::string& config_hash);

/// Records {type: "I"|"P", degree, charge, value} and thresholds
/// {type, degree, below}, as a JSON array. Values may be integers or
/// decimal strings.
std::pair<InvariantTable, InvariantTable> invariant_tables_from_json(const Json& j);

/// Records {d: "p/q", gamma, value}.
NLTable nl_table_from_json(const Json& j);

}  // namespace tiltwall
