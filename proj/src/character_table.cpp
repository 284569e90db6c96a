#include "ctrz/character_table.hpp"

#include "ctrz/error.hpp"

namespace ctrz {

std::size_t CharacterTable::identity_class() const {
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (classes[c].size == 1) return c;
  return 0;
}

std::vector<BigInt> CharacterTable::degrees() const {
  std::vector<BigInt> out;
  const std::size_t id = identity_class();
  for (const auto& row : values) {
    const Cyclotomic& d = row[id];
    out.push_back(d.is_rational() && is_integer(d.rational()) ? d.rational().get_num() : BigInt(0));
  }
  return out;
}

namespace {

Violation make_violation(std::string relation, std::string expected, std::string actual) {
  Violation v;
  v.relation = std::move(relation);
  v.expected = std::move(expected);
  v.actual = std::move(actual);
  return v;
}

}  // namespace

std::vector<Violation> validate(const CharacterTable& t) {
  std::vector<Violation> out;
  const std::size_t r = t.class_count();
  if (t.character_count() != r) {
    out.push_back(make_violation("square table", std::to_string(r) + " characters",
                                 std::to_string(t.character_count())));
    return out;
  }
  for (std::size_t i = 0; i < r; ++i)
    if (t.values[i].size() != r) {
      auto v = make_violation("row length", std::to_string(r), std::to_string(t.values[i].size()));
      v.row = i;
      out.push_back(v);
      return out;
    }

  BigInt size_sum = 0;
  for (const auto& c : t.classes) size_sum += static_cast<unsigned long>(c.size);
  if (size_sum != static_cast<unsigned long>(t.group_order))
    out.push_back(make_violation("class sizes sum to the group order", std::to_string(t.group_order),
                                 size_sum.get_str()));

  const std::size_t id = t.identity_class();
  BigInt degree_squares = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const Cyclotomic& d = t.values[i][id];
    if (!d.is_rational() || !is_integer(d.rational()) || d.rational() <= 0) {
      auto v = make_violation("degree is a positive integer", "positive integer", display(d));
      v.row = i;
      v.column = id;
      out.push_back(v);
      continue;
    }
    degree_squares += d.rational().get_num() * d.rational().get_num();
  }
  if (degree_squares != static_cast<unsigned long>(t.group_order))
    out.push_back(make_violation("sum of squared degrees equals the group order",
                                 std::to_string(t.group_order), degree_squares.get_str()));

  std::vector<std::vector<Cyclotomic>> conj(r);
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& x : t.values[i]) conj[i].push_back(x.conj());

  const Cyclotomic order(BigRational(static_cast<unsigned long>(t.group_order)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      Cyclotomic sum;
      for (std::size_t c = 0; c < r; ++c)
        sum += t.values[i][c] * conj[j][c] * Cyclotomic(BigRational(static_cast<unsigned long>(t.classes[c].size)));
      const Cyclotomic expected = i == j ? order : Cyclotomic();
      if (sum != expected) {
        auto v = make_violation("first orthogonality", display(expected), display(sum));
        v.row = i;
        v.other_row = j;
        out.push_back(v);
      }
    }
  }
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t d = c; d < r; ++d) {
      Cyclotomic sum;
      for (std::size_t i = 0; i < r; ++i) sum += t.values[i][c] * conj[i][d];
      Cyclotomic expected;
      if (c == d) {
        if (t.classes[c].size == 0) continue;
        BigRational centralizer(static_cast<unsigned long>(t.group_order),
                                static_cast<unsigned long>(t.classes[c].size));
        centralizer.canonicalize();
        expected = Cyclotomic(centralizer);
      }
      if (sum != expected) {
        auto v = make_violation("second orthogonality", display(expected), display(sum));
        v.column = c;
        v.other_column = d;
        out.push_back(v);
      }
    }
  }
  return out;
}

std::vector<Violation> verify(CharacterTable& t) {
  auto findings = validate(t);
  t.verified = findings.empty();
  return findings;
}

ClassFunction permutation_character(const FiniteGroup& g, const ClassSet& cs, const CharacterTable& t) {
  (void)g;
  if (cs.count() != t.class_count())
    throw InputError("class count mismatch: " + std::to_string(cs.count()) + " classes vs table with " +
                     std::to_string(t.class_count()));
  ClassFunction f;
  for (std::size_t c = 0; c < cs.count(); ++c)
    f.values.emplace_back(t.conductor,
                          BigRational(static_cast<unsigned long>(fixed_point_count(cs[c].representative))));
  return f;
}

ClassFunction character(const CharacterTable& t, std::size_t row) { return ClassFunction{t.values.at(row)}; }

Cyclotomic inner_product(const CharacterTable& t, const ClassFunction& f, const ClassFunction& h) {
  if (f.values.size() != t.class_count() || h.values.size() != t.class_count())
    throw InputError("class function length does not match the table");
  Cyclotomic sum;
  for (std::size_t c = 0; c < t.class_count(); ++c) {
    Cyclotomic term = f.values[c] * h.values[c].conj();
    sum += term * Cyclotomic(BigRational(static_cast<unsigned long>(t.classes[c].size)));
  }
  return sum * Cyclotomic(BigRational(1, static_cast<unsigned long>(t.group_order)));
}

MultiplicityVector decompose(const CharacterTable& t, const ClassFunction& f) {
  MultiplicityVector out;
  for (std::size_t i = 0; i < t.character_count(); ++i) {
    Cyclotomic m = inner_product(t, f, character(t, i));
    const std::string where = "multiplicity of " +
                              (i < t.character_labels.size() ? t.character_labels[i] : std::to_string(i + 1));
    if (!m.is_rational()) throw ValidationError(where + " is irrational: " + display(m));
    BigInt n = require_integer(m.rational(), where);
    if (n < 0) throw ValidationError(where + " is negative: " + n.get_str());
    out.entries.push_back(std::move(n));
  }
  return out;
}

std::string to_string(const MultiplicityVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.entries.size(); ++i) {
    if (i) out += ", ";
    out += v.entries[i].get_str();
  }
  return out + ")";
}

}  // namespace ctrz
