#include <doctest.h>

#include <random>
#include <set>

#include "ctrz/character_table.hpp"
#include "ctrz/classes.hpp"
#include "ctrz/datasets.hpp"
#include "ctrz/dixon.hpp"
#include "ctrz/error.hpp"
#include "ctrz/matching.hpp"
#include "ctrz/table_json.hpp"
#include "fixtures.hpp"

using namespace ctrz;

namespace {

std::multiset<BigInt> degree_set(const CharacterTable& t) {
  auto d = t.degrees();
  return {d.begin(), d.end()};
}

bool has_relation(const std::vector<Violation>& vs, const std::string& prefix) {
  for (const auto& v : vs)
    if (v.relation.rfind(prefix, 0) == 0) return true;
  return false;
}

}  // namespace

TEST_SUITE("chartab") {

TEST_CASE("computed tables are valid with the expected degrees") {
  const std::multiset<BigInt> degrees{1, 3, 3, 6, 7, 8, 7, 7, 14, 21, 21};
  for (const auto* f : {&fx::g8(), &fx::h14()}) {
    CHECK(f->table.verified);
    CHECK(validate(f->table).empty());
    CHECK(degree_set(f->table) == degrees);
    BigInt sum = 0;
    for (const auto& d : f->table.degrees()) sum += d * d;
    CHECK(sum == 1344);
  }
}

TEST_CASE("degree-3 characters take (-1±√-7)/2 on the order-7 classes") {
  for (const auto* f : {&fx::g8(), &fx::h14()}) {
    const auto& t = f->table;
    for (std::size_t row : {1u, 2u}) {
      CHECK(t.values[row][t.identity_class()] == Cyclotomic(3));
      std::multiset<std::string> at7;
      for (std::size_t c = 0; c < t.class_count(); ++c)
        if (t.classes[c].order == 7) at7.insert(display(t.values[row][c]));
      CHECK(at7 == std::multiset<std::string>{"(-1+sqrt(-7))/2", "(-1-sqrt(-7))/2"});
    }
  }
}

TEST_CASE("validator localizes an injected fault") {
  CharacterTable t = fx::g8().table;
  t.values[4][3] += Cyclotomic(1);
  auto vs = validate(t);
  CHECK(!vs.empty());
  CHECK(has_relation(vs, "first orthogonality"));
  CHECK(has_relation(vs, "second orthogonality"));
  bool row_hit = false, col_hit = false;
  for (const auto& v : vs) {
    if (v.row == 4u || v.other_row == 4u) row_hit = true;
    if (v.column == 3u || v.other_column == 3u) col_hit = true;
  }
  CHECK(row_hit);
  CHECK(col_hit);
  CHECK_FALSE(verify(t).empty());
  CHECK_FALSE(t.verified);

  CharacterTable bad_size = fx::g8().table;
  bad_size.classes[1].size += 1;
  CHECK_FALSE(validate(bad_size).empty());
}

TEST_CASE("inner products of irreducibles") {
  const auto& t = fx::h14().table;
  for (std::size_t i = 0; i < t.character_count(); ++i)
    for (std::size_t j = 0; j < t.character_count(); ++j)
      CHECK(inner_product(t, character(t, i), character(t, j)) == Cyclotomic(i == j ? 1 : 0));
}

TEST_CASE("decompose recovers random combinations") {
  std::mt19937 rng(1344);
  const auto& t = fx::g8().table;
  for (int trial = 0; trial < 10; ++trial) {
    MultiplicityVector m;
    ClassFunction f;
    f.values.assign(t.class_count(), Cyclotomic());
    for (std::size_t i = 0; i < t.character_count(); ++i) {
      m.entries.push_back(static_cast<long>(rng() % 51));
      for (std::size_t c = 0; c < t.class_count(); ++c) f.values[c] += t.values[i][c] * BigRational(m.entries.back());
    }
    CHECK(decompose(t, f) == m);
  }
  ClassFunction half = character(t, 1);
  for (auto& v : half.values) v /= Cyclotomic(2);
  CHECK_THROWS_AS(decompose(t, half), ValidationError);
  ClassFunction neg = character(t, 1);
  for (auto& v : neg.values) v = -v;
  CHECK_THROWS_AS(decompose(t, neg), ValidationError);
}

TEST_CASE("permutation characters decompose as published") {
  CHECK(to_string(decompose(fx::g8().table, fx::g8().chi)) == "(1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0)");
  CHECK(to_string(decompose(fx::h14().table, fx::h14().chi)) == "(1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0)");
  CHECK(inner_product(fx::g8().table, fx::g8().chi, fx::g8().chi) == Cyclotomic(2));
  CHECK(inner_product(fx::h14().table, fx::h14().chi, fx::h14().chi) == Cyclotomic(3));
}

TEST_CASE("permutation character values") {
  auto values = [](const ClassFunction& f) {
    std::multiset<std::string> m;
    for (const auto& v : f.values) m.insert(display(v));
    return m;
  };
  CHECK(values(fx::g8().chi) == std::multiset<std::string>{"8", "4", "2", "2", "1", "1", "0", "0", "0", "0", "0"});
  CHECK(values(fx::h14().chi) == std::multiset<std::string>{"14", "6", "6", "2", "2", "2", "2", "0", "0", "0", "0"});
  auto trivial = FiniteGroup::generate({Permutation(5)});
  auto cs = conjugacy_classes(trivial);
  auto t = compute_character_table(trivial, cs);
  CHECK(permutation_character(trivial, cs, t).values == std::vector<Cyclotomic>{Cyclotomic(5)});
  CHECK(to_string(decompose(t, permutation_character(trivial, cs, t))) == "(5)");
}

TEST_CASE("degree-weighted decomposition recovers the value at the identity") {
  for (const auto* f : {&fx::g8(), &fx::h14()}) {
    const auto& t = f->table;
    const auto degrees = t.degrees();
    ClassFunction sq = f->chi;
    for (auto& v : sq.values) v = v * v;
    for (const ClassFunction* g : {&f->chi, static_cast<const ClassFunction*>(&sq)}) {
      const auto d = decompose(t, *g);
      BigInt sum = 0;
      for (std::size_t i = 0; i < degrees.size(); ++i) sum += d.entries[i] * degrees[i];
      CHECK(Cyclotomic(BigRational(sum)) == g->values[t.identity_class()]);
    }
    CHECK(decompose(t, character(t, 0)).entries[0] == 1);
    // one orbit on points
    CHECK(decompose(t, f->chi).entries[0] == 1);
    for (std::size_t i = 0; i < t.character_count(); ++i) {
      const auto n = inner_product(t, character(t, i), character(t, i));
      CHECK(n.is_rational());
      CHECK(n.rational() >= 0);
    }
  }
}

TEST_CASE("a table matches itself trivially") {
  const auto& t = fx::g8().table;
  auto m = match_columns(t, t);
  CHECK(m.errata.empty());
  for (std::size_t i = 0; i < t.character_count(); ++i) CHECK(m.rows[i] == i);
  for (std::size_t c = 0; c < t.class_count(); ++c) CHECK(m.columns[c] == c);
}

TEST_CASE("the two groups share a character table") {
  auto m = match_columns(fx::g8().table, fx::h14().table);
  CHECK(m.errata.empty());
  CHECK(m.mismatched_cells == 0);
  auto back = match_columns(fx::h14().table, fx::g8().table);
  CHECK(back.errata.empty());
}

TEST_CASE("element orders alone cannot pair the columns") {
  std::multiset<std::uint64_t> og, oh;
  for (const auto& c : fx::g8().table.classes) og.insert(c.order);
  for (const auto& c : fx::h14().table.classes) oh.insert(c.order);
  CHECK(og != oh);
}

TEST_CASE("matching a shuffled table") {
  CharacterTable t = fx::h14().table;
  CharacterTable shuffled = t;
  std::vector<std::size_t> rows{3, 0, 10, 2, 1, 5, 4, 7, 6, 9, 8};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    shuffled.values[i] = t.values[rows[i]];
    shuffled.character_labels[i] = "x" + std::to_string(i);
  }
  auto m = match_columns(t, shuffled);
  CHECK(m.errata.empty());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < t.class_count(); ++c)
      CHECK(t.values[m.rows[i]][m.columns[c]] == shuffled.values[i][c]);
  auto aligned = align_rows(t, shuffled, m);
  CHECK(aligned.character_labels[0] == "x0");
}

TEST_CASE("the transcription fails validation and its errata are localized") {
  auto doc = load_builtin_table("paper-table");
  CHECK_FALSE(doc.table.verified);
  auto vs = validate(doc.table);
  CHECK(has_relation(vs, "first orthogonality"));
  // every failure involves the degree-3 rows or the column they misprint
  for (const auto& v : vs) {
    const bool rows = v.row == 1u || v.row == 2u || v.other_row == 1u || v.other_row == 2u;
    const bool column = v.column == 4u || v.other_column == 4u;
    CHECK((rows || column));
  }
  const auto& f = fx::g8();
  auto keys = transcription_keys(doc, "g1344-deg8", f.chi);
  auto m = match_columns(f.table, doc.table, keys);
  CHECK(m.mismatched_cells == 2);
  for (const auto& e : m.errata.findings) {
    CHECK(e.kind == "cell-mismatch");
    CHECK(e.column == 4u);
    CHECK(e.external == "0");
    CHECK(e.computed == "-1");
  }
}

TEST_CASE("printed class lists reconcile with findings") {
  for (const auto* f : {&fx::g8(), &fx::h14()}) {
    auto findings = reconcile_classes(f->group, f->classes, f->spec.printed_classes);
    CHECK_FALSE(findings.empty());
    bool divisibility = false;
    for (const auto& x : findings)
      if (x.relation == "element order divides centralizer order") divisibility = true;
    CHECK(divisibility);
  }
  // a consistent listing reconciles cleanly
  std::vector<PrintedClass> ok;
  const auto& f = fx::g8();
  for (std::size_t c = 0; c < f.classes.count(); ++c)
    ok.push_back({"k" + std::to_string(c), f.classes[c].size, format_cycles(f.classes[c].representative)});
  CHECK(reconcile_classes(f.group, f.classes, ok).empty());
}

TEST_CASE("conjugate pairs") {
  const auto& t = fx::g8().table;
  auto rows = conjugate_row_pairs(t);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0] == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK(conjugate_column_pairs(t).size() == 1);
}

TEST_CASE("json round trip") {
  const auto& t = fx::h14().table;
  auto j = table_to_json(t, Json{{"note", "x"}});
  auto doc = table_from_json(j);
  CHECK(doc.table.verified);
  CHECK(doc.metadata["note"] == "x");
  CHECK(doc.table.values == t.values);
  CHECK(table_to_json(doc.table, doc.metadata).dump() == j.dump());
  CHECK(decode_value(encode_value(Cyclotomic::zeta(84, 5)), 84) == Cyclotomic::zeta(84, 5));
  CHECK(encode_value(Cyclotomic(BigRational(-3, 2))) == "-3/2");
  CHECK_THROWS_AS(table_from_json(Json{{"name", "x"}}), InputError);
  CHECK_THROWS_AS(decode_value(Json("1/0"), 1), InputError);
}

}
