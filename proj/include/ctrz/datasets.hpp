#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctrz/group.hpp"
#include "ctrz/matching.hpp"
#include "ctrz/table_json.hpp"

namespace ctrz {

/// A permutation group described by generators, as stored in group files.
struct GroupSpec {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::string> generators;
  std::vector<std::string> comments;  // provenance, including any as-printed originals
  std::optional<std::uint64_t> order;
  std::vector<PrintedClass> printed_classes;
};

GroupSpec group_spec_from_json(const Json& j);
Json group_spec_to_json(const GroupSpec& spec);

/// Enumerates the group; throws InputError if a recorded order disagrees.
FiniteGroup build_group(const GroupSpec& spec, std::size_t element_cap = kDefaultElementCap);

/// "g1344-deg8", "g1344-deg14", "paper-table".
std::vector<std::string> builtin_names();
/// Raw JSON text of an embedded dataset; throws InputError for unknown names.
std::string_view builtin_text(std::string_view name);
GroupSpec load_builtin_group(std::string_view name);
TableDocument load_builtin_table(std::string_view name);

/// Column keys from a transcription's "permutation_characters" metadata for
/// `group_name`, against the computed permutation character. Empty when the
/// document lists nothing for that group.
MatchConstraints transcription_keys(const TableDocument& doc, const std::string& group_name,
                                    const ClassFunction& chi);

/// `computed` with its rows in the order of the embedded transcription, matched
/// using the permutation character of `group_name` as column keys.
CharacterTable align_to_published_rows(const CharacterTable& computed, const ClassFunction& chi,
                                       const std::string& group_name);

}  // namespace ctrz
