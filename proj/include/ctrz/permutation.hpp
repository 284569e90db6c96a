#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ctrz {

/// A bijection on the points 1..n. Stored 0-based; every textual form is 1-based.
///
/// Products compose left to right: (p * q)(i) = q(p(i)), which matches how
/// cycle strings are read.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity

  /// Takes 0-based images; throws InputError unless they form a bijection.
  static Permutation from_images(std::vector<std::uint32_t> images);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  std::span<const std::uint32_t> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long exponent) const;
  std::uint64_t order() const;

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Parses `(a,b,...)(c,...)...` into the left-to-right product of its cycles.
/// Empty input (or "()") is the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Canonical disjoint-cycle form: each cycle starts at its smallest point,
/// cycles ordered by that point, fixed points omitted, identity is "()".
std::string format_cycles(const Permutation& p);

std::size_t fixed_point_count(const Permutation& p);

}  // namespace ctrz
