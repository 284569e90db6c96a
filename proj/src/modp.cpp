#include "ctrz/modp.hpp"

#include <utility>

#include "ctrz/error.hpp"

namespace ctrz {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  uint128 result = 1 % p;
  uint128 b = base % p;
  while (exp > 0) {
    if (exp & 1u) result = result * b % p;
    b = b * b % p;
    exp >>= 1u;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw InconsistencyError("zero has no inverse mod p");
  return pow_mod(a, p - 2, p);
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t n = p - 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    factors.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) factors.push_back(n);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool generates = true;
    for (auto q : factors)
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        generates = false;
        break;
      }
    if (generates) return g;
  }
  throw InputError("no primitive root; modulus is not prime");
}

PrimeFieldMatrix::PrimeFieldMatrix(std::uint64_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

void PrimeFieldMatrix::set(std::size_t i, std::size_t j, long long value) {
  const auto p = static_cast<long long>(p_);
  data_[i * cols_ + j] = static_cast<std::uint64_t>(((value % p) + p) % p);
}

ModVector PrimeFieldMatrix::apply(const ModVector& v) const {
  ModVector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    uint128 acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += static_cast<uint128>(at(i, j)) * v[j];
    out[i] = static_cast<std::uint64_t>(acc % p_);
  }
  return out;
}

std::vector<std::size_t> PrimeFieldMatrix::row_reduce() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(data_[row * cols_ + j], data_[pivot * cols_ + j]);
    const std::uint64_t inv = inverse_mod(at(row, col), p_);
    for (std::size_t j = 0; j < cols_; ++j) data_[row * cols_ + j] = data_[row * cols_ + j] * inv % p_;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || at(i, col) == 0) continue;
      const std::uint64_t factor = at(i, col);
      for (std::size_t j = 0; j < cols_; ++j)
        data_[i * cols_ + j] = (data_[i * cols_ + j] + (p_ - factor) * data_[row * cols_ + j]) % p_;
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::uint64_t PrimeFieldMatrix::determinant() const {
  if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
  PrimeFieldMatrix m = *this;
  std::uint64_t det = 1;
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t pivot = col;
    while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.data_[col * cols_ + j], m.data_[pivot * cols_ + j]);
      det = (p_ - det) % p_;
    }
    det = det * m.at(col, col) % p_;
    const std::uint64_t inv = inverse_mod(m.at(col, col), p_);
    for (std::size_t i = col + 1; i < rows_; ++i) {
      const std::uint64_t factor = m.at(i, col) * inv % p_;
      if (factor == 0) continue;
      for (std::size_t j = col; j < cols_; ++j)
        m.data_[i * cols_ + j] = (m.data_[i * cols_ + j] + (p_ - factor) * m.at(col, j)) % p_;
    }
  }
  return det;
}

std::vector<ModVector> echelon_basis(std::vector<ModVector> vectors, std::uint64_t p) {
  if (vectors.empty()) return {};
  PrimeFieldMatrix m(p, vectors.size(), vectors.front().size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < vectors[i].size(); ++j) m.set(i, j, static_cast<long long>(vectors[i][j]));
  const auto pivots = m.row_reduce();
  std::vector<ModVector> out(pivots.size(), ModVector(m.cols()));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j);
  return out;
}

std::vector<ModVector> nullspace_mod_p(const PrimeFieldMatrix& m) {
  PrimeFieldMatrix r = m;
  const auto pivots = r.row_reduce();
  const std::uint64_t p = m.modulus();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<ModVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ModVector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - r.at(i, free)) % p;
    basis.push_back(std::move(v));
  }
  return echelon_basis(std::move(basis), p);
}

}  // namespace ctrz
