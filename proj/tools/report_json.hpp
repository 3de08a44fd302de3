#pragma once

#include <json.hpp>

#include "ssc/analysis.hpp"
#include "ssc/oracle.hpp"

namespace ssc::cli {

using Json = nlohmann::ordered_json;

Json to_json(const RationalMatrix& m);           // rows of "p/q" strings
Json to_json(std::span<const Rational> v);
Json to_json(const ColorTrace& trace);           // 1-based node ids
Json to_json(const AnalysisReport& report);
Json to_json(const OracleVerdict& verdict);

}  // namespace ssc::cli
