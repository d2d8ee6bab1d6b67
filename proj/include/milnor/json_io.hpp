#pragma once

#include <json.hpp>

#include "milnor/grading.hpp"
#include "milnor/koszul.hpp"
#include "milnor/milnor.hpp"
#include "milnor/series.hpp"

namespace milnor {

// JSON views of the report types. Keys come out sorted (nlohmann objects are
// ordered maps) and big integers serialize as canonical decimal strings, so
// output is byte-deterministic for a fixed input.

nlohmann::json to_json(const WeightSystem& ws);
nlohmann::json to_json(const IntegerPolynomial& p);
nlohmann::json to_json(const TruncatedSeries& s);
nlohmann::json to_json(const ExactnessReport& report);
nlohmann::json to_json(const MilnorReport& report);

}  // namespace milnor
