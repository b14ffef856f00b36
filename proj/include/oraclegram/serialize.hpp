#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "oraclegram/functions.hpp"
#include "oraclegram/gram.hpp"
#include "oraclegram/multicall.hpp"
#include "oraclegram/tif.hpp"

namespace oraclegram {

using nlohmann::json;

// Big integers travel as decimal strings so values survive any JSON reader.
void to_json(json& j, const AnalysisRecord& r);
void from_json(const json& j, AnalysisRecord& r);

void to_json(json& j, const MultiCallReport& r);
void from_json(const json& j, MultiCallReport& r);

void to_json(json& j, const SpectrumReport& r);
void from_json(const json& j, SpectrumReport& r);

void to_json(json& j, const ColumnProfile& p);
void from_json(const json& j, ColumnProfile& p);

void to_json(json& j, const Characterize4Record& r);
void from_json(const json& j, Characterize4Record& r);

void to_json(json& j, const TifGraph& g);
void to_json(json& j, const CycleResult& c);
void to_json(json& j, const M2TifVerdict& v);
void to_json(json& j, const TifEnumeration& e);

/// Parses a function set from JSON text; malformed input of any kind
/// surfaces as ParseError.
FunctionSet load_function_set(const std::string& text);
FunctionSet load_function_set(std::istream& in);

std::string dump(const json& j);

}  // namespace oraclegram

namespace nlohmann {

// FunctionSet has no default constructor, so it converts through a
// serializer specialization instead of free to_json/from_json hooks.
template <>
struct adl_serializer<oraclegram::FunctionSet> {
  static void to_json(json& j, const oraclegram::FunctionSet& s);
  static oraclegram::FunctionSet from_json(const json& j);
};

}  // namespace nlohmann
