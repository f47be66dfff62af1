#pragma once

#include <string>

#include <json.hpp>

#include "locmouf/jordan_pair.hpp"
#include "locmouf/moufang.hpp"
#include "locmouf/report.hpp"

namespace locmouf {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {"name", "pass", "required", "evaluated", "failures", "witness", "note"};
/// the witness is an object in variable order.
Json to_json(const Check& c);
/// Array of checks in report order.
Json to_json(const VerifyReport& r);

/// {"schema": 1, "points": [...], "classes": [[...]], "u_inf": [[...]],
///  "tau": [...], "infinity": i}. Permutations are image tables.
Json moufang_to_json(const FinMoufang& m);

/// Shape validation only; throws SchemaError naming the offending location,
/// e.g. "/u_inf/3: not a bijection". Returns the data and the optional
/// infinity index.
std::pair<MoufangData, std::optional<Index>> moufang_data_from_json(const Json& j);

/// Shape validation followed by FinMoufang::build (ConstructionFailure).
FinMoufang moufang_from_json(const Json& j);

/// Reads and parses a file; malformed JSON becomes SchemaError at "/".
FinMoufang parse_moufang_file(const std::string& path);

/// Operation tables of a Jordan pair: element labels, addition tables and
/// the Q tables ("q_plus"[x][y] = yQ_x for x in V+).
Json pair_tables(const JordanPair& v);

}  // namespace locmouf
