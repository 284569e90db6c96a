#include "ctrz/group.hpp"

#include <numeric>
#include <string>

#include "ctrz/error.hpp"

namespace ctrz {

FiniteGroup FiniteGroup::generate(std::vector<Permutation> generators, std::size_t element_cap) {
  if (generators.empty()) throw InputError("at least one generator is required");
  FiniteGroup g;
  g.degree_ = generators.front().degree();
  for (const auto& gen : generators)
    if (gen.degree() != g.degree_)
      throw InputError("generators have mismatched degrees (" + std::to_string(g.degree_) +
                       " vs " + std::to_string(gen.degree()) + ")");
  g.generators_ = std::move(generators);

  Permutation identity(g.degree_);
  g.element_index_.emplace(identity, 0);
  g.elements_.push_back(std::move(identity));
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const auto& gen : g.generators_) {
      Permutation next = g.elements_[head] * gen;
      if (g.element_index_.contains(next)) continue;
      if (g.elements_.size() >= element_cap)
        throw InputError("group exceeds the element cap of " + std::to_string(element_cap));
      g.element_index_.emplace(next, g.elements_.size());
      g.elements_.push_back(std::move(next));
    }
  }
  for (const auto& x : g.elements_) g.exponent_ = std::lcm(g.exponent_, x.order());
  return g;
}

std::optional<std::size_t> FiniteGroup::index_of(const Permutation& p) const {
  auto it = element_index_.find(p);
  if (it == element_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::index(const Permutation& p) const {
  auto it = element_index_.find(p);
  if (it == element_index_.end()) throw InputError(format_cycles(p) + " is not a group element");
  return it->second;
}

}  // namespace ctrz
