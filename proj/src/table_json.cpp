#include "ctrz/table_json.hpp"

#include "ctrz/error.hpp"

namespace ctrz {

Json encode_value(const Cyclotomic& z) {
  if (z.is_rational()) return to_string(z.rational());
  if (auto view = find_quadratic(z)) return Json{{"D", view->D}, {"a", to_string(view->a)}, {"b", to_string(view->b)}};
  Json coeffs = Json::array();
  for (const auto& c : z.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"conductor", z.conductor()}, {"coeffs", coeffs}};
}

Cyclotomic decode_value(const Json& j, unsigned conductor) {
  try {
    if (j.is_string()) return Cyclotomic(conductor, parse_rational(j.get<std::string>()));
    if (j.is_number_integer()) return Cyclotomic(conductor, BigRational(j.get<long>()));
    if (j.is_object() && j.contains("D")) {
      QuadraticView view{j.at("D").get<long long>(), parse_rational(j.at("a").get<std::string>()),
                         parse_rational(j.at("b").get<std::string>())};
      return from_quadratic(view, conductor);
    }
    if (j.is_object() && j.contains("conductor")) {
      std::vector<BigRational> coeffs;
      for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
      const auto value = Cyclotomic::from_coeffs(j.at("conductor").get<unsigned>(), std::move(coeffs));
      return value.lift(conductor);
    }
  } catch (const Json::exception& err) {
    throw InputError(std::string("malformed exact value: ") + err.what());
  }
  throw InputError("malformed exact value: " + j.dump());
}

Json table_to_json(const CharacterTable& t, const Json& metadata) {
  Json classes = Json::array();
  for (const auto& c : t.classes) {
    Json jc{{"label", c.label}, {"size", c.size}, {"order", c.order}};
    if (c.representative) jc["representative"] = *c.representative;
    classes.push_back(jc);
  }
  Json characters = Json::array();
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    Json values = Json::array();
    for (const auto& v : t.values[i]) values.push_back(encode_value(v));
    characters.push_back(Json{
        {"label", i < t.character_labels.size() ? t.character_labels[i] : std::to_string(i + 1)},
        {"values", values}});
  }
  Json j{{"name", t.name},     {"group_order", t.group_order}, {"conductor", t.conductor},
         {"verified", t.verified}, {"classes", classes},        {"characters", characters}};
  if (!metadata.empty()) j["metadata"] = metadata;
  return j;
}

TableDocument table_from_json(const Json& j) {
  TableDocument doc;
  CharacterTable& t = doc.table;
  try {
    t.name = j.value("name", std::string{});
    t.group_order = j.at("group_order").get<std::uint64_t>();
    t.conductor = j.value("conductor", 1u);
    for (const auto& jc : j.at("classes")) {
      ClassInfo c;
      c.label = jc.at("label").get<std::string>();
      c.size = jc.at("size").get<std::uint64_t>();
      c.order = jc.value("order", std::uint64_t{0});
      if (jc.contains("representative")) c.representative = jc.at("representative").get<std::string>();
      t.classes.push_back(std::move(c));
    }
    for (const auto& jch : j.at("characters")) {
      t.character_labels.push_back(jch.value("label", std::to_string(t.character_labels.size() + 1)));
      std::vector<Cyclotomic> row;
      for (const auto& v : jch.at("values")) row.push_back(decode_value(v, t.conductor));
      t.values.push_back(std::move(row));
    }
    if (j.contains("metadata")) doc.metadata = j.at("metadata");
  } catch (const Json::exception& err) {
    throw InputError(std::string("malformed table file: ") + err.what());
  }
  verify(t);
  return doc;
}

Json finding_to_json(const Finding& f, const CharacterTable* external) {
  Json j{{"kind", f.kind}, {"external", f.external}, {"computed", f.computed}, {"relation", f.relation}};
  if (f.row) {
    j["row"] = *f.row + 1;
    if (external && *f.row < external->character_labels.size()) j["row_label"] = external->character_labels[*f.row];
  }
  if (f.column) {
    j["column"] = *f.column + 1;
    if (external && *f.column < external->classes.size()) j["column_label"] = external->classes[*f.column].label;
  }
  return j;
}

Json matching_to_json(const TableMatching& m, const CharacterTable& computed, const CharacterTable& external) {
  Json rows = Json::array();
  for (std::size_t e = 0; e < m.rows.size(); ++e)
    rows.push_back(Json{{"external", external.character_labels.at(e)},
                        {"computed", computed.character_labels.at(m.rows[e])}});
  Json columns = Json::array();
  for (std::size_t e = 0; e < m.columns.size(); ++e)
    columns.push_back(Json{{"external", external.classes.at(e).label},
                           {"computed", computed.classes.at(m.columns[e]).label}});
  return Json{{"rows", rows},
              {"columns", columns},
              {"mismatched_cells", m.mismatched_cells},
              {"optimal_column_matchings", m.optimal_column_matchings},
              {"notes", m.notes}};
}

Json violation_to_json(const Violation& v, const CharacterTable& t) {
  Json j{{"relation", v.relation}, {"expected", v.expected}, {"actual", v.actual}};
  auto row_label = [&](std::size_t i) {
    return i < t.character_labels.size() ? t.character_labels[i] : std::to_string(i + 1);
  };
  if (v.row) j["row"] = row_label(*v.row);
  if (v.other_row) j["other_row"] = row_label(*v.other_row);
  if (v.column) j["column"] = t.classes.at(*v.column).label;
  if (v.other_column) j["other_column"] = t.classes.at(*v.other_column).label;
  return j;
}

}  // namespace ctrz
