#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ctrz {

__extension__ typedef unsigned __int128 uint128;  // products of two residues

bool is_prime(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
/// a^{-1} mod p for prime p; a must be nonzero mod p.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);
/// Smallest generator of F_p^*.
std::uint64_t primitive_root(std::uint64_t p);

using ModVector = std::vector<std::uint64_t>;

/// Dense matrix over F_p, entries kept in [0, p).
class PrimeFieldMatrix {
 public:
  PrimeFieldMatrix(std::uint64_t p, std::size_t rows, std::size_t cols);

  std::uint64_t modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint64_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Stores `value` reduced mod p; negative values are accepted.
  void set(std::size_t i, std::size_t j, long long value);

  ModVector apply(const ModVector& v) const;  // M v
  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> row_reduce();
  std::uint64_t determinant() const;

 private:
  std::uint64_t p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> data_;
};

/// Basis of {v : M v = 0}, returned in reduced row echelon form: each vector
/// has leading entry 1, leading positions strictly increase, and no other
/// basis vector is nonzero at a leading position.
std::vector<ModVector> nullspace_mod_p(const PrimeFieldMatrix& m);

/// Brings a list of vectors (rows) to reduced row echelon form, dropping
/// zero rows.
std::vector<ModVector> echelon_basis(std::vector<ModVector> vectors, std::uint64_t p);

}  // namespace ctrz
