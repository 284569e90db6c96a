#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ctrz/character_table.hpp"
#include "ctrz/classes.hpp"
#include "ctrz/modp.hpp"

namespace ctrz {

/// Class multiplication coefficients of the centre of the group algebra.
///
/// coefficient(i, j, k) = #{(x, y) ∈ C_i × C_j : xy = z} for a fixed z ∈ C_k,
/// so that C_i C_j = Σ_k a_ijk C_k as class sums.
struct ClassAlgebra {
  std::size_t r = 0;
  std::vector<std::uint64_t> sizes;
  std::vector<std::size_t> inverse_class;
  std::vector<std::vector<std::vector<std::uint64_t>>> constants;  // [i][j][k]

  std::uint64_t coefficient(std::size_t i, std::size_t j, std::size_t k) const {
    return constants[i][j][k];
  }
  /// M_i with (M_i)_{jk} = a_ijk, reduced mod p.
  PrimeFieldMatrix matrix_mod_p(std::size_t i, std::uint64_t p) const;
};

ClassAlgebra class_constants(const FiniteGroup& g, const ClassSet& cs);

/// Smallest prime p ≡ 1 (mod exponent) with p > 2·sqrt(order).
std::uint64_t choose_prime(std::uint64_t exponent, std::uint64_t order,
                           std::uint64_t search_cap = 1ull << 32);

/// Common eigenvectors of all M_i over F_p, one per irreducible character.
struct EigenData {
  std::uint64_t p = 0;
  std::vector<ModVector> eigenvalues;   // [character][class] = ω_class
  std::vector<ModVector> eigenvectors;  // scaled so the identity coordinate is 1
};

/// Splits F_p^r by the eigenspaces of M_1, M_2, ... in class order until every
/// piece is a line. Throws InconsistencyError if the splitting stalls.
EigenData common_eigenbasis(const ClassAlgebra& ca, std::uint64_t p);

/// The fixed primitive e-th root of unity mod p standing in for ζ_e.
std::uint64_t root_of_unity_mod_p(std::uint64_t exponent, std::uint64_t p);

/// Image of a cyclotomic number under ζ_e ↦ eta; denominators must be prime to p.
std::uint64_t reduce_mod_p(const Cyclotomic& z, std::uint64_t p, std::uint64_t eta);

/// Turns central characters mod p into exact character values: degrees from
/// the norm identity, values at each class from the eigenvalue multiplicities
/// of the representing matrix, recovered by a discrete Fourier sum over the
/// powers of the class. Rows come out sorted by degree, then by value.
CharacterTable lift_character_values(const EigenData& ed, const ClassSet& cs, std::uint64_t exponent);

/// Full pipeline: classes, class constants, prime, eigenvectors, lifting.
/// The result has passed validate().
CharacterTable compute_character_table(const FiniteGroup& g, const ClassSet& cs);
CharacterTable compute_character_table(const FiniteGroup& g);

/// "1a", "2a", "2b", ... by element order, lettered in class order.
std::vector<std::string> class_labels(const ClassSet& cs);

}  // namespace ctrz
