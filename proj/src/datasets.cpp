#include "ctrz/datasets.hpp"

#include <array>
#include <utility>

#include "ctrz/error.hpp"

namespace ctrz {

namespace {

constexpr std::string_view kDeg8 = R"json({
  "name": "g1344-deg8",
  "degree": 8,
  "order": 1344,
  "generators": [
    "(5,7)(6,8)",
    "(2,3,5)(4,7,6)",
    "(1,2)(3,4)(5,6)(7,8)",
    "(1,5)(2,6)(3,7)(4,8)"
  ],
  "comments": [
    "As printed: (5,7)(6,8),(2,3,5)(4,7,6),(1,2)(3,4)(5,6)(7,8))(1,5)(2,6)(3,7)(4,8)",
    "The unbalanced ')' is read as the separator between the last two generators; the closure has order 1344."
  ],
  "printed_classes": [
    {"label": "C1", "size": 1, "representative": "()"},
    {"label": "C2", "size": 7, "representative": "(1,2)(3,4)(5,6)(7,8)"},
    {"label": "C3", "size": 42, "representative": "(1,5)(3,7)"},
    {"label": "C4", "size": 42, "representative": "(1,3)(2,8)(4,6)(5,7)"},
    {"label": "C5", "size": 84, "representative": "(1,5,2)(3,8,7)"},
    {"label": "C6", "size": 168, "representative": "(1,2,5,6)(3,4,7,8)"},
    {"label": "C7", "size": 168, "representative": "(1,5)(2,4,6,8)"},
    {"label": "C8", "size": 224, "representative": "(1,2,7,4)(3,8,5,6)"},
    {"label": "C9", "size": 224, "representative": "(1,7)(2,3,6,8,5,4)"},
    {"label": "C10", "size": 192, "representative": "(2,7,4,8,6,5,3)"},
    {"label": "C11", "size": 192, "representative": "(2,8,3,4,5,7,6)"}
  ]
})json";

constexpr std::string_view kDeg14 = R"json({
  "name": "g1344-deg14",
  "degree": 14,
  "order": 1344,
  "generators": [
    "(1,2,3,4,5,6,7)(14,13,12,11,10,9,8)",
    "(1,4,7,9,14,11,8,6)(2,5,13,10)"
  ],
  "comments": [
    "As printed: (1,2,3,4,5,6)(14,13,12,11,10,9,8),(1,4,7,9,14,11,8,6)(2,5,13,10)",
    "The printed first cycle (1,2,3,4,5,6) is corrected to the 7-cycle (1,2,3,4,5,6,7), matching the order-7 class representative (1,2,3,4,5,6,7)(8,14,13,12,11,10,9).",
    "As printed, the two generators produce a group of order 87178291200; corrected, the closure has order 1344 with the expected class sizes."
  ],
  "printed_classes": [
    {"label": "C'1", "size": 1, "representative": "()"},
    {"label": "C'2", "size": 7, "representative": "(1, 14)(4, 11)(6, 9)(7, 8)"},
    {"label": "C'3", "size": 42, "representative": "(1, 7, 14, 8)(4, 6, 11, 9)"},
    {"label": "C'4", "size": 42, "representative": "(1, 7, 14, 8)(2, 13)(4, 9, 11, 6)(5, 10)"},
    {"label": "C'5", "size": 84, "representative": "(1, 10, 8)(3, 6, 11)(4, 12, 9)(5, 7, 14)"},
    {"label": "C'6", "size": 168, "representative": "(1, 7)(3, 12)(4, 6)(5, 10)(8, 14)(9, 11)"},
    {"label": "C'7", "size": 168, "representative": "(1, 4, 7, 6, 14, 11, 8, 9)(2, 5)(3, 12)(10, 13)"},
    {"label": "C'8", "size": 224, "representative": "(1, 4, 7, 9, 14, 11, 8, 6)(2, 5, 13, 10)"},
    {"label": "C'9", "size": 224, "representative": "(1, 5, 8, 14, 10, 7)(2, 13)(3, 6, 11)(4, 12, 9)"},
    {"label": "C'10", "size": 192, "representative": "(1, 2, 3, 4, 5, 6, 7)(8, 14, 13, 12, 11, 10, 9)"},
    {"label": "C'11", "size": 192, "representative": "(1, 4, 7, 3, 6, 2, 5)(8, 12, 9, 13, 10, 14, 11)"}
  ]
})json";

// Verbatim transcription, including the printed inconsistencies. Class sizes
// come from the printed centralizer orders; orders from the representatives
// printed for the degree-8 column labels.
constexpr std::string_view kTranscription = R"json({
  "name": "paper-table",
  "group_order": 1344,
  "conductor": 7,
  "verified": false,
  "classes": [
    {"label": "C1", "size": 1, "order": 1},
    {"label": "C2", "size": 7, "order": 2},
    {"label": "C6", "size": 84, "order": 4},
    {"label": "C4", "size": 42, "order": 2},
    {"label": "C3", "size": 42, "order": 2},
    {"label": "C5", "size": 224, "order": 3},
    {"label": "C9", "size": 224, "order": 6},
    {"label": "C7", "size": 168, "order": 4},
    {"label": "C8", "size": 168, "order": 4},
    {"label": "C10", "size": 192, "order": 7},
    {"label": "C11", "size": 192, "order": 7}
  ],
  "characters": [
    {"label": "chi1", "values": ["1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1"]},
    {"label": "chi2", "values": ["3", "3", "-1", "-1", "0", "0", "0", "1", "1",
                                 {"D": -7, "a": "-1/2", "b": "1/2"}, {"D": -7, "a": "-1/2", "b": "-1/2"}]},
    {"label": "chi3", "values": ["3", "3", "-1", "-1", "0", "0", "0", "1", "1",
                                 {"D": -7, "a": "-1/2", "b": "-1/2"}, {"D": -7, "a": "-1/2", "b": "1/2"}]},
    {"label": "chi4", "values": ["6", "6", "2", "2", "2", "0", "0", "0", "0", "-1", "-1"]},
    {"label": "chi5", "values": ["7", "7", "-1", "-1", "-1", "1", "1", "-1", "-1", "0", "0"]},
    {"label": "chi6", "values": ["8", "8", "0", "0", "0", "-1", "-1", "0", "0", "1", "1"]},
    {"label": "chi7", "values": ["7", "-1", "-1", "3", "-1", "1", "-1", "-1", "1", "0", "0"]},
    {"label": "chi8", "values": ["7", "-1", "-1", "-1", "3", "1", "-1", "1", "-1", "0", "0"]},
    {"label": "chi9", "values": ["14", "-2", "-2", "2", "2", "-1", "1", "0", "0", "0", "0"]},
    {"label": "chi10", "values": ["21", "-3", "1", "1", "-3", "0", "0", "1", "-1", "0", "0"]},
    {"label": "chi11", "values": ["21", "-3", "1", "-3", "1", "0", "0", "-1", "1", "0", "0"]}
  ],
  "metadata": {
    "centralizer_row": [1344, 192, 16, 32, 32, 6, 6, 8, 8, 7, 7],
    "column_labels": {
      "g1344-deg8": ["C1", "C2", "C6", "C4", "C3", "C5", "C9", "C7", "C8", "C10", "C11"],
      "g1344-deg14": ["C'1", "C'2", "C'6", "C'3", "C'4", "C'5", "C'9", "C'7", "C'8", "C'10", "C'11"]
    },
    "permutation_characters": {
      "g1344-deg8": [8, 0, 0, 0, 4, 2, 0, 2, 0, 1, 1],
      "g1344-deg14": [14, 6, 2, 6, 2, 2, 0, 0, 2, 0, 0]
    },
    "diagonal_variants": {
      "g1344-deg8": [[8, 0, 0, 0, 4, 2, 0, 2, 0, 1, 1], [8, 0, 0, 0, 4, 2, 0, 0, 2, 1, 1]],
      "g1344-deg14": [[14, 6, 2, 6, 2, 2, 0, 0, 2, 0, 0], [14, 6, 2, 6, 2, 2, 0, 2, 0, 0, 0]]
    },
    "notes": [
      "Values exactly as printed; the table is not a valid character table.",
      "Column labels are advisory: the two groups label the shared columns differently."
    ]
  }
})json";

constexpr std::array<std::pair<std::string_view, std::string_view>, 3> kBuiltins{{
    {"g1344-deg8", kDeg8},
    {"g1344-deg14", kDeg14},
    {"paper-table", kTranscription},
}};

}  // namespace

GroupSpec group_spec_from_json(const Json& j) {
  GroupSpec spec;
  try {
    spec.name = j.value("name", std::string{});
    spec.degree = j.at("degree").get<std::size_t>();
    spec.generators = j.at("generators").get<std::vector<std::string>>();
    if (j.contains("comments")) spec.comments = j.at("comments").get<std::vector<std::string>>();
    if (j.contains("order")) spec.order = j.at("order").get<std::uint64_t>();
    if (j.contains("printed_classes"))
      for (const auto& pc : j.at("printed_classes"))
        spec.printed_classes.push_back(PrintedClass{pc.at("label").get<std::string>(), pc.at("size").get<std::uint64_t>(),
                                                    pc.at("representative").get<std::string>()});
  } catch (const Json::exception& err) {
    throw InputError(std::string("malformed group file: ") + err.what());
  }
  if (spec.degree == 0) throw InputError("group degree must be positive");
  return spec;
}

Json group_spec_to_json(const GroupSpec& spec) {
  Json j{{"name", spec.name}, {"degree", spec.degree}, {"generators", spec.generators}, {"comments", spec.comments}};
  if (spec.order) j["order"] = *spec.order;
  if (!spec.printed_classes.empty()) {
    Json classes = Json::array();
    for (const auto& pc : spec.printed_classes)
      classes.push_back(Json{{"label", pc.label}, {"size", pc.size}, {"representative", pc.representative}});
    j["printed_classes"] = classes;
  }
  return j;
}

FiniteGroup build_group(const GroupSpec& spec, std::size_t element_cap) {
  std::vector<Permutation> gens;
  for (const auto& text : spec.generators) gens.push_back(parse_cycles(text, spec.degree));
  if (gens.empty()) gens.emplace_back(spec.degree);
  FiniteGroup g = FiniteGroup::generate(std::move(gens), element_cap);
  if (spec.order && *spec.order != g.order())
    throw InputError("group \"" + spec.name + "\" records order " + std::to_string(*spec.order) +
                     " but its generators give " + std::to_string(g.order()));
  return g;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : kBuiltins) out.emplace_back(name);
  return out;
}

std::string_view builtin_text(std::string_view name) {
  for (const auto& [key, text] : kBuiltins)
    if (key == name) return text;
  throw InputError("unknown builtin dataset \"" + std::string(name) + "\"");
}

GroupSpec load_builtin_group(std::string_view name) {
  const Json j = Json::parse(builtin_text(name));
  if (!j.contains("generators")) throw InputError("builtin \"" + std::string(name) + "\" is not a group");
  return group_spec_from_json(j);
}

TableDocument load_builtin_table(std::string_view name) {
  const Json j = Json::parse(builtin_text(name));
  if (!j.contains("characters")) throw InputError("builtin \"" + std::string(name) + "\" is not a character table");
  return table_from_json(j);
}

MatchConstraints transcription_keys(const TableDocument& doc, const std::string& group_name,
                                    const ClassFunction& chi) {
  MatchConstraints mc;
  const auto pc = doc.metadata.find("permutation_characters");
  if (pc == doc.metadata.end() || !pc->is_object() || !pc->contains(group_name)) return mc;
  for (const auto& v : (*pc)[group_name]) mc.external_keys.push_back(v.dump());
  if (mc.external_keys.size() != doc.table.class_count() || chi.values.size() != doc.table.class_count()) return {};
  for (const auto& v : chi.values) mc.computed_keys.push_back(display(v));
  return mc;
}

CharacterTable align_to_published_rows(const CharacterTable& computed, const ClassFunction& chi,
                                       const std::string& group_name) {
  const TableDocument printed = load_builtin_table("paper-table");
  const MatchConstraints keys = transcription_keys(printed, group_name, chi);
  if (keys.external_keys.empty()) throw InputError("no published column keys for \"" + group_name + "\"");
  return align_rows(computed, printed.table, match_columns(computed, printed.table, keys));
}

}  // namespace ctrz
