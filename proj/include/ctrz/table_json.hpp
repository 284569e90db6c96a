#pragma once

#include <string>

#include "json.hpp"

#include "ctrz/character_table.hpp"
#include "ctrz/matching.hpp"

namespace ctrz {

using Json = nlohmann::json;

/// "p/q" for rationals, {"D","a","b"} for quadratic irrationals and
/// {"conductor","coeffs"} for everything else.
Json encode_value(const Cyclotomic& z);
/// Any of the three encodings, placed in Q(ζ_conductor). Throws InputError.
Cyclotomic decode_value(const Json& j, unsigned conductor);

/// A character table file together with whatever extra metadata it carried.
struct TableDocument {
  CharacterTable table;
  Json metadata = Json::object();
};

Json table_to_json(const CharacterTable& t, const Json& metadata = Json::object());
/// Reads the table format. The stored "verified" flag is advisory: the table
/// is re-validated and `verified` reflects the outcome.
TableDocument table_from_json(const Json& j);

Json finding_to_json(const Finding& f, const CharacterTable* external = nullptr);
Json matching_to_json(const TableMatching& m, const CharacterTable& computed, const CharacterTable& external);
Json violation_to_json(const Violation& v, const CharacterTable& t);

}  // namespace ctrz
