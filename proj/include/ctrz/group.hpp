#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ctrz/permutation.hpp"

namespace ctrz {

inline constexpr std::size_t kDefaultElementCap = 10'000'000;

/// A permutation group held as its complete element list.
class FiniteGroup {
 public:
  /// Breadth-first closure of `generators` under right multiplication, starting
  /// from the identity. Throws InputError on mixed degrees or when the closure
  /// grows past `element_cap`.
  static FiniteGroup generate(std::vector<Permutation> generators,
                              std::size_t element_cap = kDefaultElementCap);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t index) const { return elements_[index]; }

  /// Position of `p` in elements(), or nullopt if p is not in the group.
  std::optional<std::size_t> index_of(const Permutation& p) const;
  /// Like index_of, but p must be a member.
  std::size_t index(const Permutation& p) const;

  /// lcm of all element orders.
  std::uint64_t exponent() const { return exponent_; }

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> element_index_;
  std::uint64_t exponent_ = 1;
};

}  // namespace ctrz
