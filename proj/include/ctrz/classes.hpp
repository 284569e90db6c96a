#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ctrz/group.hpp"

namespace ctrz {

struct ConjugacyClass {
  Permutation representative;  // lexicographically smallest member
  std::size_t size = 0;
  std::vector<std::size_t> members;  // sorted element indices
  std::uint64_t element_order = 1;
};

/// Conjugacy classes in canonical order: (size, element order, smallest
/// member's image array), all ascending. The identity class is always first.
class ClassSet {
 public:
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t count() const { return classes_.size(); }
  const ConjugacyClass& operator[](std::size_t c) const { return classes_[c]; }

  std::size_t class_of(std::size_t element_index) const { return class_of_[element_index]; }

  /// Class containing rep^t for a representative of class c; any integer t.
  std::size_t power_map(long long t, std::size_t c) const;
  std::uint64_t exponent() const { return power_maps_.size(); }

  /// Class containing the inverses of class c.
  std::size_t inverse_class(std::size_t c) const { return power_map(-1, c); }

  friend ClassSet conjugacy_classes(const FiniteGroup& g);

 private:
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> power_maps_;  // [t mod exponent][class]
};

ClassSet conjugacy_classes(const FiniteGroup& g);

/// |G| / |class c|.
std::uint64_t centralizer_order(const FiniteGroup& g, const ClassSet& cs, std::size_t c);

}  // namespace ctrz
