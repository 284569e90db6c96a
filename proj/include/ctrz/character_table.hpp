#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctrz/classes.hpp"
#include "ctrz/cyclotomic.hpp"

namespace ctrz {

struct ClassInfo {
  std::string label;
  std::uint64_t size = 0;
  std::uint64_t order = 0;  // 0 when unknown
  std::optional<std::string> representative;
};

/// Irreducible characters (rows) against conjugacy classes (columns).
///
/// A table read from outside carries verified = false until validate() passes.
struct CharacterTable {
  std::string name;
  std::uint64_t group_order = 0;
  unsigned conductor = 1;
  bool verified = false;
  std::vector<ClassInfo> classes;
  std::vector<std::string> character_labels;
  std::vector<std::vector<Cyclotomic>> values;  // [character][class]

  std::size_t class_count() const { return classes.size(); }
  std::size_t character_count() const { return values.size(); }
  /// Index of the size-1 class holding the identity; the first size-1 class.
  std::size_t identity_class() const;
  std::vector<BigInt> degrees() const;
};

/// Values of a class function, indexed like the table's columns.
struct ClassFunction {
  std::vector<Cyclotomic> values;
};

struct MultiplicityVector {
  std::vector<BigInt> entries;
  friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
};

struct Violation {
  std::string relation;
  std::optional<std::size_t> row;
  std::optional<std::size_t> other_row;
  std::optional<std::size_t> column;
  std::optional<std::size_t> other_column;
  std::string expected;
  std::string actual;
};

/// Every failed check; an empty list means the table is a character table.
std::vector<Violation> validate(const CharacterTable& t);

/// Marks the table verified iff validate() finds nothing; returns the findings.
std::vector<Violation> verify(CharacterTable& t);

/// Number of fixed points of each class representative.
ClassFunction permutation_character(const FiniteGroup& g, const ClassSet& cs, const CharacterTable& t);

ClassFunction character(const CharacterTable& t, std::size_t row);

/// (1/|G|) Σ_C |C| f(C) conj(h(C)).
Cyclotomic inner_product(const CharacterTable& t, const ClassFunction& f, const ClassFunction& h);

/// Multiplicity of each irreducible in f. Throws ValidationError if any
/// coefficient is not a nonnegative integer.
MultiplicityVector decompose(const CharacterTable& t, const ClassFunction& f);

std::string to_string(const MultiplicityVector& v);

}  // namespace ctrz
