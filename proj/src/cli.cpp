#include "ctrz/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "ctrz/character_table.hpp"
#include "ctrz/classes.hpp"
#include "ctrz/datasets.hpp"
#include "ctrz/dixon.hpp"
#include "ctrz/error.hpp"
#include "ctrz/matching.hpp"
#include "ctrz/orbits.hpp"
#include "ctrz/table_json.hpp"
#include "ctrz/tensor.hpp"

namespace ctrz::cli {

namespace {

enum class Format { table, json, csv };

struct Options {
  std::string builtin;
  std::string group_file;
  std::string table_file;
  std::string format = "table";
  bool allow_unverified = false;
  unsigned agreement_bound = 12;

  unsigned k = 1;
  std::string method;
  unsigned from = 1;
  unsigned to = 6;
  unsigned t = 2;
  bool reconcile = false;
  std::string positional;
};

// What a command produced: JSON payload plus its plain renderings.
struct Output {
  Json result = Json::object();
  std::string text;
  std::string csv;
  int status = 0;
};

struct Dataset {
  std::string id;
  GroupSpec spec;
};

Json json_int(const BigInt& v) { return v.get_str(); }

Json json_vector(const MultiplicityVector& d) {
  Json a = Json::array();
  for (const auto& v : d.entries) a.push_back(json_int(v));
  return a;
}

std::string joined(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open \"" + path + "\"");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("\"" + path + "\" is not valid JSON: " + e.what());
  }
}

std::optional<Dataset> select_dataset(const Options& o) {
  if (!o.builtin.empty() && !o.group_file.empty()) throw InputError("--builtin and --group are exclusive");
  if (!o.builtin.empty()) return Dataset{o.builtin, load_builtin_group(o.builtin)};
  if (!o.group_file.empty()) return Dataset{o.group_file, group_spec_from_json(read_json_file(o.group_file))};
  return std::nullopt;
}

Dataset require_dataset(const Options& o) {
  auto d = select_dataset(o);
  if (!d) throw InputError("no group given; use --builtin NAME or --group FILE");
  return *d;
}

// A file path, or the name of an embedded table.
TableDocument load_table(const std::string& source) {
  if (!std::filesystem::exists(source)) {
    const auto names = builtin_names();
    if (std::find(names.begin(), names.end(), source) != names.end()) return load_builtin_table(source);
  }
  Json j = read_json_file(source);
  // Accept the JSON report of `chartable compute` as well as a bare table.
  if (j.is_object() && j.contains("command") && j.contains("result")) j = j["result"];
  return table_from_json(j);
}

std::optional<ClosedFormGroup> closed_form_group(const std::string& name) {
  if (name == "g1344-deg8") return ClosedFormGroup::deg8;
  if (name == "g1344-deg14") return ClosedFormGroup::deg14;
  return std::nullopt;
}

// Everything downstream of enumeration. Rows follow the published order when
// the group is one of the two builtins.
struct Analysis {
  Dataset data;
  FiniteGroup group;
  ClassSet classes;
  CharacterTable table;
  ClassFunction chi;
  std::optional<ClosedFormGroup> closed;
  bool external = false;
};

CharacterTable checked_external_table(const Options& o) {
  TableDocument doc = load_table(o.table_file);
  if (!doc.table.verified && !o.allow_unverified)
    throw InputError("table \"" + o.table_file + "\" fails validation; pass --allow-unverified to use it anyway");
  return doc.table;
}

Analysis analyse(const Options& o) {
  Dataset data = require_dataset(o);
  FiniteGroup g = build_group(data.spec);
  ClassSet cs = conjugacy_classes(g);
  CharacterTable computed = compute_character_table(g, cs);
  ClassFunction chi = permutation_character(g, cs, computed);
  std::optional<ClosedFormGroup> closed;

  if (!o.table_file.empty()) {
    CharacterTable ext = checked_external_table(o);
    TableMatching m = match_columns(computed, ext);
    if (m.mismatched_cells != 0 && ext.verified)
      throw InputError("table \"" + o.table_file + "\" is not the character table of " + data.id);
    ClassFunction f;
    for (std::size_t e = 0; e < ext.class_count(); ++e) f.values.push_back(chi.values.at(m.columns.at(e)));
    return Analysis{std::move(data), std::move(g), std::move(cs), std::move(ext), std::move(f), std::nullopt, true};
  }

  if (auto cf = closed_form_group(data.spec.name)) {
    computed = align_to_published_rows(computed, chi, data.spec.name);
    check_closed_form_alignment(computed, chi, *cf);
    closed = cf;
  }
  return Analysis{std::move(data), std::move(g), std::move(cs), std::move(computed), std::move(chi), closed, false};
}

// Every method available for k; throws InconsistencyError on disagreement.
struct Multiplicities {
  MultiplicityVector chosen;
  std::vector<std::string> checked;
};

Multiplicities multiplicities(const Analysis& a, unsigned k, const std::string& method, unsigned bound) {
  if (k == 0) throw InputError("k must be at least 1");
  const std::string m = method.empty() ? "recurrence" : method;
  if (m == "closed-form" && !a.closed)
    throw InputError("closed forms exist only for the builtin groups with computed tables");

  std::vector<std::pair<std::string, MultiplicityVector>> results;
  auto run_method = [&](const std::string& name) {
    if (name == "direct") results.emplace_back(name, multiplicities_direct(a.table, a.chi, k));
    else if (name == "recurrence") results.emplace_back(name, multiplicities_recurrence(a.table, a.chi, k));
    else results.emplace_back(name, closed_form_multiplicities(*a.closed, k));
  };
  run_method(m);
  if (k <= bound) {
    for (std::string other : {"direct", "recurrence", "closed-form"}) {
      if (other == m || (other == "closed-form" && !a.closed)) continue;
      run_method(other);
    }
    for (const auto& [name, v] : results)
      if (!(v == results.front().second))
        throw InconsistencyError("k=" + std::to_string(k) + ": " + name + " gives " + to_string(v) + " but " +
                                 results.front().first + " gives " + to_string(results.front().second));
  }
  Multiplicities out{results.front().second, {}};
  for (const auto& r : results) out.checked.push_back(r.first);
  return out;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

// Left-aligned text grid.
std::string grid(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::string s;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) line += (i + 1 < r.size() ? pad(r[i], width[i] + 2) : r[i]);
    s += line + "\n";
  }
  return s;
}

std::string csv_lines(const std::vector<std::vector<std::string>>& rows) {
  std::string s;
  for (const auto& r : rows) s += joined(r, ",") + "\n";
  return s;
}

std::string finding_text(const Finding& f, const CharacterTable* ext) {
  std::string where;
  if (f.row) where += ext && *f.row < ext->character_labels.size() ? ext->character_labels[*f.row] : "row " + std::to_string(*f.row + 1);
  if (f.column) {
    if (!where.empty()) where += " @ ";
    where += ext && *f.column < ext->class_count() ? ext->classes[*f.column].label : "column " + std::to_string(*f.column + 1);
  }
  std::string s = f.kind;
  if (!where.empty()) s += " " + where;
  s += ": printed " + f.external + ", computed " + f.computed;
  if (!f.relation.empty()) s += " (" + f.relation + ")";
  return s;
}

std::string class_finding_text(Finding f, const std::vector<PrintedClass>& printed) {
  std::string label = f.row && *f.row < printed.size() ? printed[*f.row].label : std::string();
  f.row.reset();
  std::string s = finding_text(f, nullptr);
  return label.empty() ? s : s.insert(f.kind.size(), " " + label);
}

std::string violation_text(const Violation& v, const CharacterTable& t) {
  Json j = violation_to_json(v, t);
  std::string s = v.relation;
  if (j.contains("row")) s += " " + j["row"].get<std::string>();
  if (j.contains("other_row")) s += "," + j["other_row"].get<std::string>();
  if (j.contains("column")) s += " " + j["column"].get<std::string>();
  if (j.contains("other_column")) s += "," + j["other_column"].get<std::string>();
  return s + ": expected " + v.expected + ", got " + v.actual;
}

// ---- commands --------------------------------------------------------------

Output cmd_order(const Options& o) {
  Dataset d = require_dataset(o);
  FiniteGroup g = build_group(d.spec);
  Output out;
  out.result = Json{{"order", g.order()}, {"degree", g.degree()}};
  out.text = std::to_string(g.order()) + "\n";
  out.csv = out.text;
  return out;
}

Output cmd_classes(const Options& o) {
  Dataset d = require_dataset(o);
  FiniteGroup g = build_group(d.spec);
  ClassSet cs = conjugacy_classes(g);
  const auto labels = class_labels(cs);
  Output out;
  Json list = Json::array();
  std::vector<std::vector<std::string>> text{{"class", "size", "order", "centralizer", "fixed", "representative"}};
  std::vector<std::vector<std::string>> csv{{"class", "size", "order", "centralizer", "fixed"}};
  for (std::size_t c = 0; c < cs.count(); ++c) {
    const auto& cl = cs[c];
    const auto cent = centralizer_order(g, cs, c);
    const auto fixed = fixed_point_count(cl.representative);
    list.push_back(Json{{"label", labels[c]}, {"size", cl.size}, {"order", cl.element_order}, {"centralizer", cent},
                        {"fixed_points", fixed}, {"representative", format_cycles(cl.representative)}});
    text.push_back({labels[c], std::to_string(cl.size), std::to_string(cl.element_order), std::to_string(cent),
                    std::to_string(fixed), format_cycles(cl.representative)});
    csv.push_back({labels[c], std::to_string(cl.size), std::to_string(cl.element_order), std::to_string(cent),
                   std::to_string(fixed)});
  }
  out.result = Json{{"order", g.order()}, {"classes", list}};
  out.text = grid(text);
  out.csv = csv_lines(csv);
  if (o.reconcile) {
    const auto findings = reconcile_classes(g, cs, d.spec.printed_classes);
    Json fj = Json::array();
    for (const auto& f : findings) {
      Json j = finding_to_json(f);
      if (f.row) j["printed_class"] = d.spec.printed_classes.at(*f.row).label;
      fj.push_back(j);
      out.text += "finding: " + class_finding_text(f, d.spec.printed_classes) + "\n";
    }
    out.result["findings"] = fj;
    if (!findings.empty()) out.status = 1;
  }
  return out;
}

Output cmd_permchar(const Options& o) {
  Analysis a = analyse(o);
  const MultiplicityVector d = decompose(a.table, a.chi);
  const Cyclotomic norm = inner_product(a.table, a.chi, a.chi);
  Output out;
  Json values = Json::array();
  std::vector<std::string> labels, shown;
  for (std::size_t c = 0; c < a.table.class_count(); ++c) {
    values.push_back(encode_value(a.chi.values[c]));
    labels.push_back(a.table.classes[c].label);
    shown.push_back(display(a.chi.values[c]));
  }
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < d.entries.size(); ++i)
    if (d.entries[i] != 0)
      parts.push_back((d.entries[i] == 1 ? std::string() : d.entries[i].get_str()) + a.table.character_labels[i]);
  out.result = Json{{"classes", labels},
                    {"values", values},
                    {"decomposition", json_vector(d)},
                    {"characters", a.table.character_labels},
                    {"norm", encode_value(norm)}};
  out.text = grid({labels, shown}) + "decomposition: " + to_string(d) + " = " + joined(parts, " + ") +
             "\nnorm: " + display(norm) + "\n";
  out.csv = csv_lines({labels, shown});
  return out;
}

std::vector<std::vector<std::string>> table_rows(const CharacterTable& t) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{""};
  for (const auto& c : t.classes) head.push_back(c.label);
  rows.push_back(head);
  std::vector<std::string> sizes{"size"};
  for (const auto& c : t.classes) sizes.push_back(std::to_string(c.size));
  rows.push_back(sizes);
  for (std::size_t i = 0; i < t.character_count(); ++i) {
    std::vector<std::string> r{t.character_labels[i]};
    for (const auto& v : t.values[i]) r.push_back(display(v));
    rows.push_back(r);
  }
  return rows;
}

Output cmd_chartable_compute(const Options& o) {
  Analysis a = analyse(o);
  Output out;
  Json meta{{"group", a.data.spec.name}, {"row_order", a.closed ? "published" : "canonical"}};
  Json notes = Json::array();
  for (const auto& [i, j] : conjugate_row_pairs(a.table))
    notes.push_back(a.table.character_labels[i] + "/" + a.table.character_labels[j] +
                    ": conjugate pair, assignment conventional");
  for (const auto& [c, d] : conjugate_column_pairs(a.table))
    notes.push_back(a.table.classes[c].label + "/" + a.table.classes[d].label +
                    ": conjugate pair, assignment conventional");
  meta["notes"] = notes;
  out.result = table_to_json(a.table, meta);
  out.text = grid(table_rows(a.table));
  for (const auto& n : notes) out.text += "note: " + n.get<std::string>() + "\n";
  auto rows = table_rows(a.table);
  rows[0][0] = "character";
  out.csv = csv_lines(rows);
  return out;
}

Output cmd_chartable_check(const Options& o) {
  const std::string source = !o.positional.empty() ? o.positional : o.table_file;
  CharacterTable t;
  std::string id;
  if (!source.empty()) {
    t = load_table(source).table;
    id = source;
  } else {
    Options plain = o;
    plain.table_file.clear();
    t = analyse(plain).table;
    id = "computed";
  }
  const auto violations = validate(t);
  Output out;
  Json vs = Json::array();
  std::vector<std::vector<std::string>> csv{{"relation", "row", "other_row", "column", "other_column", "expected", "actual"}};
  for (const auto& v : violations) {
    Json j = violation_to_json(v, t);
    vs.push_back(j);
    out.text += "violation: " + violation_text(v, t) + "\n";
    auto field = [&](const char* key) { return j.contains(key) ? j[key].get<std::string>() : std::string(); };
    std::string rel = v.relation;
    std::replace(rel.begin(), rel.end(), ' ', '-');
    csv.push_back({rel, field("row"), field("other_row"), field("column"), field("other_column"), v.expected, v.actual});
  }
  out.result = Json{{"table", t.name.empty() ? id : t.name}, {"valid", violations.empty()}, {"violations", vs}};
  out.text += violations.empty() ? "valid character table\n"
                                 : std::to_string(violations.size()) + " violation(s)\n";
  out.csv = csv_lines(csv);
  out.status = violations.empty() ? 0 : 1;
  return out;
}

Output cmd_chartable_match(const Options& o) {
  Dataset d = require_dataset(o);
  FiniteGroup g = build_group(d.spec);
  ClassSet cs = conjugacy_classes(g);
  CharacterTable computed = compute_character_table(g, cs);
  ClassFunction chi = permutation_character(g, cs, computed);

  const std::string source = !o.positional.empty() ? o.positional : (o.table_file.empty() ? "paper-table" : o.table_file);
  TableDocument doc = load_table(source);
  const MatchConstraints keys = transcription_keys(doc, d.spec.name, chi);
  TableMatching m = match_columns(computed, doc.table, keys);

  Output out;
  out.result = matching_to_json(m, computed, doc.table);
  std::vector<Finding> errata = m.errata.findings;
  for (const auto& f : errata) out.text += "finding: " + finding_text(f, &doc.table) + "\n";

  // The published class lists only mean something against the transcription
  // that labels its columns with them.
  const bool transcription = !keys.external_keys.empty();
  if (transcription && !d.spec.printed_classes.empty()) {
    Json cj = Json::array();
    for (const auto& f : reconcile_classes(g, cs, d.spec.printed_classes)) {
      Json j = finding_to_json(f);
      if (f.row) j["printed_class"] = d.spec.printed_classes.at(*f.row).label;
      cj.push_back(j);
      errata.push_back(f);
      out.text += "finding: " + class_finding_text(f, d.spec.printed_classes) + "\n";
    }
    out.result["class_findings"] = cj;
  }

  if (transcription && doc.metadata.contains("diagonal_variants") && doc.metadata["diagonal_variants"].contains(d.spec.name)) {
    std::vector<Cyclotomic> diag;
    for (std::size_t e = 0; e < doc.table.class_count(); ++e) diag.push_back(chi.values.at(m.columns.at(e)));
    std::vector<std::vector<Cyclotomic>> variants;
    for (const auto& row : doc.metadata["diagonal_variants"][d.spec.name]) {
      std::vector<Cyclotomic> v;
      for (const auto& x : row) v.emplace_back(x.get<long>());
      variants.push_back(std::move(v));
    }
    const auto hit = matching_diagonal(diag, variants);
    Json dj{{"computed", Json::array()}, {"matches_variant", hit ? Json(*hit + 1) : Json(nullptr)}};
    for (const auto& v : diag) dj["computed"].push_back(encode_value(v));
    for (std::size_t vi = 0; vi < variants.size(); ++vi)
      for (std::size_t e = 0; e < diag.size() && e < variants[vi].size(); ++e)
        if (!(variants[vi][e] == diag[e])) {
          Finding f;
          f.kind = "diagonal-variant-" + std::to_string(vi + 1);
          f.column = e;
          f.external = display(variants[vi][e]);
          f.computed = display(diag[e]);
          f.relation = "fixed points of the class";
          errata.push_back(f);
          out.text += "finding: " + finding_text(f, &doc.table) + "\n";
        }
    out.result["diagonal"] = dj;
    out.text += "printed diagonal matching the computed one: " +
                (hit ? "variant " + std::to_string(*hit + 1) : std::string("none")) + "\n";
  }

  std::vector<std::vector<std::string>> csv{{"kind", "row", "column", "printed", "computed"}};
  for (const auto& f : errata) {
    Json j = finding_to_json(f, &doc.table);
    auto field = [&](const char* key) { return j.contains(key) && j[key].is_string() ? j[key].get<std::string>() : std::string(); };
    csv.push_back({f.kind, field("row_label"), field("column_label"), f.external, f.computed});
  }
  out.csv = csv_lines(csv);
  for (const auto& n : m.notes) out.text += "note: " + n + "\n";
  out.text += std::to_string(m.mismatched_cells) + " mismatched cell(s), " + std::to_string(errata.size()) +
              " finding(s)\n";
  out.result["errata_count"] = errata.size();
  out.status = errata.empty() ? 0 : 1;
  return out;
}

Output cmd_decompose(const Options& o) {
  Analysis a = analyse(o);
  const auto mult = multiplicities(a, o.k, o.method, o.agreement_bound);
  Output out;
  out.result = Json{{"k", o.k},
                    {"method", o.method.empty() ? "recurrence" : o.method},
                    {"methods_checked", mult.checked},
                    {"characters", a.table.character_labels},
                    {"multiplicities", json_vector(mult.chosen)}};
  out.text = to_string(mult.chosen) + "\n";
  std::vector<std::vector<std::string>> csv{{"character", "multiplicity"}};
  for (std::size_t i = 0; i < mult.chosen.entries.size(); ++i)
    csv.push_back({a.table.character_labels[i], mult.chosen.entries[i].get_str()});
  out.csv = csv_lines(csv);
  return out;
}

Output cmd_structure(const Options& o) {
  Analysis a = analyse(o);
  const auto mult = multiplicities(a, o.k, o.method, o.agreement_bound);
  const SemisimpleStructure s = semisimple_structure(mult.chosen, a.table.degrees());
  Output out;
  Json blocks = Json::array();
  std::vector<std::vector<std::string>> csv{{"block_size", "count"}};
  for (const auto& [size, count] : s.blocks) {
    blocks.push_back(Json{{"block_size", json_int(size)}, {"count", json_int(count)}});
    csv.push_back({size.get_str(), count.get_str()});
  }
  out.result = Json{{"k", o.k}, {"structure", s.display()}, {"blocks", blocks}, {"dimension", json_int(s.dimension)},
                    {"multiplicities", json_vector(mult.chosen)}};
  if (s.degree_sum) out.result["degree_sum"] = json_int(*s.degree_sum);
  out.text = s.display() + "\n";
  out.csv = csv_lines(csv);
  return out;
}

Output cmd_dims(const Options& o) {
  if (o.from == 0 || o.to < o.from) throw InputError("need 1 <= --from <= --to");
  Analysis a = analyse(o);
  const auto rows = dims_report(a.table, a.chi, o.from, o.to, a.closed);
  Json list = Json::array();
  std::vector<std::vector<std::string>> text{{"k", "sum_of_squares", "character_formula", "closed_form", "agree"}};
  std::vector<std::string> csv;
  for (const auto& r : rows) {
    if (!r.agree) throw InconsistencyError("dimension methods disagree at k=" + std::to_string(r.k));
    // Cross-checks the multiplicity vectors as well.
    if (r.k <= o.agreement_bound) multiplicities(a, r.k, "", o.agreement_bound);
    Json j{{"k", r.k}, {"sum_of_squares", json_int(r.sum_of_squares)},
           {"character_formula", json_int(r.character_formula)}, {"agree", r.agree}};
    j["closed_form"] = r.closed_form ? json_int(*r.closed_form) : Json(nullptr);
    list.push_back(j);
    text.push_back({std::to_string(r.k), r.sum_of_squares.get_str(), r.character_formula.get_str(),
                    r.closed_form ? r.closed_form->get_str() : "-", r.agree ? "yes" : "no"});
    csv.push_back(r.sum_of_squares.get_str());
  }
  Output out;
  out.result = Json{{"from", o.from}, {"to", o.to}, {"dimensions", list}};
  out.text = grid(text);
  out.csv = joined(csv, ",") + "\n";
  return out;
}

Output cmd_orbits(const Options& o) {
  Dataset d = require_dataset(o);
  FiniteGroup g = build_group(d.spec);
  ClassSet cs = conjugacy_classes(g);
  const std::string method = o.method.empty() ? "burnside" : o.method;
  if (method != "direct" && method != "burnside") throw InputError("orbits --method must be direct or burnside");
  const mpz_class count =
      orbit_count_tuples(g, cs, o.t, method == "direct" ? OrbitMethod::direct : OrbitMethod::burnside);

  // The other method too, when the tuple space is small enough to enumerate.
  std::vector<std::string> checked{method};
  mpz_class tuples;
  mpz_ui_pow_ui(tuples.get_mpz_t(), g.degree(), o.t);
  if (tuples <= kDefaultTupleCap) {
    const std::string other = method == "direct" ? "burnside" : "direct";
    const mpz_class c2 =
        orbit_count_tuples(g, cs, o.t, other == "direct" ? OrbitMethod::direct : OrbitMethod::burnside);
    if (c2 != count)
      throw InconsistencyError("t=" + std::to_string(o.t) + ": " + method + " gives " + count.get_str() + " but " +
                               other + " gives " + c2.get_str());
    checked.push_back(other);
  }
  Output out;
  out.result = Json{{"t", o.t}, {"method", method}, {"methods_checked", checked}, {"orbits", count.get_str()}};
  out.text = count.get_str() + "\n";
  out.csv = out.text;
  return out;
}

Output cmd_export(const Options& o) {
  const std::string name = o.positional;
  if (name.empty()) throw InputError("export needs a dataset name: " + joined(builtin_names(), ", "));
  Output out;
  out.result = Json::parse(builtin_text(name));
  out.text = out.result.dump(2) + "\n";
  out.csv = out.text;
  return out;
}

void emit(std::ostream& out, Format fmt, const std::vector<std::string>& args, const std::string& dataset,
          const Output* o, int status, const std::string& error) {
  if (fmt == Format::json) {
    Json report{{"command", args}, {"exit_status", status}};
    report["dataset"] = dataset.empty() ? Json(nullptr) : Json(dataset);
    report["result"] = o ? o->result : Json(nullptr);
    if (!error.empty()) report["error"] = error;
    out << report.dump(2) << "\n";
  } else if (o) {
    out << (fmt == Format::csv ? o->csv : o->text);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Character tables and tensor-power centralizer algebras of permutation groups", "ctrz"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--builtin", o.builtin, "embedded group: " + joined(builtin_names(), ", "));
  app.add_option("--group", o.group_file, "group file (JSON)");
  app.add_option("--table", o.table_file, "character table file (JSON) or embedded table name");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_flag("--allow-unverified", o.allow_unverified, "use an external table that fails validation");
  app.add_option("--agreement-bound", o.agreement_bound, "cross-check all methods up to this k");

  auto* order = app.add_subcommand("order", "group order");
  auto* classes = app.add_subcommand("classes", "conjugacy classes");
  classes->add_flag("--reconcile", o.reconcile, "check the printed class list stored with the group");
  auto* permchar = app.add_subcommand("permchar", "permutation character and its decomposition");
  auto* chartable = app.add_subcommand("chartable", "character tables");
  chartable->require_subcommand(1);
  auto* compute = chartable->add_subcommand("compute", "compute the character table");
  auto* check = chartable->add_subcommand("check", "validate a character table");
  check->add_option("table", o.positional, "table file or embedded table name");
  auto* match = chartable->add_subcommand("match", "match a table against the computed one");
  match->add_option("table", o.positional, "table file or embedded table name (default paper-table)");
  auto* dec = app.add_subcommand("decompose", "multiplicities in the k-th tensor power");
  dec->add_option("--k", o.k)->required();
  dec->add_option("--method", o.method)->check(CLI::IsMember({"direct", "recurrence", "closed-form"}));
  auto* structure = app.add_subcommand("structure", "semisimple structure of the centralizer algebra");
  structure->add_option("--k", o.k)->required();
  auto* dims = app.add_subcommand("dims", "centralizer algebra dimensions");
  dims->add_option("--from", o.from)->required();
  dims->add_option("--to", o.to)->required();
  auto* orbits = app.add_subcommand("orbits", "orbits on ordered tuples");
  orbits->add_option("--t", o.t)->required();
  orbits->add_option("--method", o.method)->check(CLI::IsMember({"direct", "burnside"}));
  auto* exp = app.add_subcommand("export", "print an embedded dataset");
  exp->add_option("name", o.positional)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    // A subcommand asking for help lands here too.
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const Format fmt = o.format == "json" ? Format::json : o.format == "csv" ? Format::csv : Format::table;
  std::string dataset = !o.builtin.empty() ? o.builtin : o.group_file;
  if (exp->parsed()) dataset = o.positional;

  int status = 0;
  std::string error;
  std::optional<Output> result;
  try {
    if (order->parsed()) result = cmd_order(o);
    else if (classes->parsed()) result = cmd_classes(o);
    else if (permchar->parsed()) result = cmd_permchar(o);
    else if (compute->parsed()) result = cmd_chartable_compute(o);
    else if (check->parsed()) result = cmd_chartable_check(o);
    else if (match->parsed()) result = cmd_chartable_match(o);
    else if (dec->parsed()) result = cmd_decompose(o);
    else if (structure->parsed()) result = cmd_structure(o);
    else if (dims->parsed()) result = cmd_dims(o);
    else if (orbits->parsed()) result = cmd_orbits(o);
    else if (exp->parsed()) result = cmd_export(o);
    status = result ? result->status : 2;
  } catch (const InputError& e) {
    status = 2;
    error = e.what();
  } catch (const ValidationError& e) {
    status = 1;
    error = e.what();
  } catch (const InconsistencyError& e) {
    status = 3;
    error = e.what();
  } catch (const Json::exception& e) {
    status = 2;
    error = e.what();
  }

  if (!error.empty()) err << "error: " << error << "\n";
  emit(out, fmt, args, dataset, result ? &*result : nullptr, status, error);
  return status;
}

}  // namespace ctrz::cli
