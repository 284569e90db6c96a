#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ctrz/character_table.hpp"

namespace ctrz {

/// One discrepancy between an external table (or class list) and computed data.
struct Finding {
  std::string kind;
  std::optional<std::size_t> row;     // external row index
  std::optional<std::size_t> column;  // external column index
  std::string external;
  std::string computed;
  std::string relation;
};

struct TableErrata {
  std::vector<Finding> findings;
  bool empty() const { return findings.empty(); }
};

/// Extra per-column labels; a computed column may only pair with an external
/// column carrying the same key. Class sizes always have to agree as well.
struct MatchConstraints {
  std::vector<std::string> computed_keys;
  std::vector<std::string> external_keys;
};

struct TableMatching {
  std::vector<std::size_t> rows;     // rows[external row] = computed row
  std::vector<std::size_t> columns;  // columns[external column] = computed column
  std::size_t mismatched_cells = 0;
  std::size_t optimal_column_matchings = 0;
  std::vector<std::string> notes;
  TableErrata errata;
};

/// Row and column bijections under which `external` agrees with `computed` in
/// as many cells as possible. Columns are enumerated within groups of equal
/// (size, key), rows are assigned optimally for each column choice; the first
/// best matching in enumeration order wins. Cells still differing go to errata.
TableMatching match_columns(const CharacterTable& computed, const CharacterTable& external,
                            const MatchConstraints& constraints = {});

/// `computed` with its rows permuted into the external row order and labelled
/// with the external row labels. Columns are unchanged.
CharacterTable align_rows(const CharacterTable& computed, const CharacterTable& external,
                          const TableMatching& matching);

/// A conjugacy class as listed in some printed source.
struct PrintedClass {
  std::string label;
  std::uint64_t size = 0;
  std::string representative;
};

/// Checks each printed (size, representative) pair against the enumerated
/// classes. A size that the representative's order cannot divide into the
/// centralizer order is reported under that relation.
std::vector<Finding> reconcile_classes(const FiniteGroup& g, const ClassSet& cs,
                                       const std::vector<PrintedClass>& printed);

/// Pairs of rows that are complex conjugates of each other.
std::vector<std::pair<std::size_t, std::size_t>> conjugate_row_pairs(const CharacterTable& t);
/// Pairs of columns that are complex conjugates of each other.
std::vector<std::pair<std::size_t, std::size_t>> conjugate_column_pairs(const CharacterTable& t);

}  // namespace ctrz
