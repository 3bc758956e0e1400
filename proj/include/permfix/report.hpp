#pragma once

#include <json.hpp>

#include <string>

#include "permfix/bigint.hpp"
#include "permfix/distribution.hpp"
#include "permfix/moments.hpp"
#include "permfix/partition.hpp"
#include "permfix/real.hpp"
#include "permfix/simulate.hpp"

namespace permfix {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Exact values survive serialization: integers as decimal strings,
// rationals as {"num": "...", "den": "..."}, reals as decimal strings
// carrying every digit the precision supports.
Json to_json(const BigInt& value);
Json to_json(const Rational& value);
Json to_json(const Real& value);
Json to_json(const MomentValue& value);
Json to_json(const Partition& lambda);
Json to_json(const ExactDistribution& dist);
Json to_json(const MomentReport& report);
Json to_json(const ShapeCheckReport& report);

// Rational parsed back from its JSON form.
Rational rational_from_json(const Json& value);

// Renders one CSV field, quoting when needed.
std::string csv_field(const std::string& text);
// "num/den" (or "num" for integers); lossless.
std::string csv_value(const MomentValue& value);

}  // namespace permfix
