#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctrz/character_table.hpp"

namespace ctrz {

/// A_ij = multiplicity of χ_j in χ_i·χ, i.e. A = X diag(χ) X^{-1}.
struct TransitionMatrix {
  std::vector<std::vector<BigInt>> entries;
};

using CyclotomicMatrix = std::vector<std::vector<Cyclotomic>>;

/// Exact Gauss-Jordan inverse. Throws ValidationError if singular.
CyclotomicMatrix inverse_matrix(const CyclotomicMatrix& m);

/// Decomposition of the pointwise k-th power of χ.
MultiplicityVector multiplicities_direct(const CharacterTable& t, const ClassFunction& chi, unsigned k);

/// Throws ValidationError if some entry is not a nonnegative integer.
TransitionMatrix transition_matrix(const CharacterTable& t, const ClassFunction& chi);

/// d^(k) = d^(1) A^(k-1).
MultiplicityVector multiplicities_recurrence(const MultiplicityVector& first, const TransitionMatrix& a, unsigned k);
MultiplicityVector multiplicities_recurrence(const CharacterTable& t, const ClassFunction& chi, unsigned k);

/// The two degree-1344 groups with published closed forms.
enum class ClosedFormGroup { deg8, deg14 };

/// Published closed forms for the eleven multiplicities, rows in the published
/// order. Throws InconsistencyError if a value is not a nonnegative integer.
MultiplicityVector closed_form_multiplicities(ClosedFormGroup group, unsigned k);
/// Published closed form for dim End_G(V^{⊗k}).
BigInt closed_form_dimension(ClosedFormGroup group, unsigned k);

/// Matrix-algebra blocks of the centralizer algebra, largest first.
struct SemisimpleStructure {
  std::vector<std::pair<BigInt, BigInt>> blocks;  // (block size m, count)
  BigInt dimension;                               // Σ count·m²
  std::optional<BigInt> degree_sum;               // Σ d_i·deg_i when degrees were supplied
  std::string display() const;                    // "M_3 ⊕ M_2 ⊕ 3M_1"
};

SemisimpleStructure semisimple_structure(const MultiplicityVector& d, const std::vector<BigInt>& degrees = {});

BigInt dimension_sum_of_squares(const MultiplicityVector& d);
/// (1/|G|) Σ_C |C|·|χ(C)|^{2k}.
BigInt dimension_character_formula(const CharacterTable& t, const ClassFunction& chi, unsigned k);

struct DimsRow {
  unsigned k = 0;
  BigInt sum_of_squares;
  BigInt character_formula;
  std::optional<BigInt> closed_form;
  bool agree = false;
};

/// Dimensions for k in [from, to] by every available method.
std::vector<DimsRow> dims_report(const CharacterTable& t, const ClassFunction& chi, unsigned from, unsigned to,
                                 std::optional<ClosedFormGroup> group = std::nullopt);

/// Throws InconsistencyError unless the closed forms at k = 1 equal the
/// decomposition of χ in the table's current row order.
void check_closed_form_alignment(const CharacterTable& t, const ClassFunction& chi, ClosedFormGroup group);

/// Index of the first candidate diagonal equal to `chi`, if any.
std::optional<std::size_t> matching_diagonal(const std::vector<Cyclotomic>& chi,
                                             const std::vector<std::vector<Cyclotomic>>& candidates);

}  // namespace ctrz
