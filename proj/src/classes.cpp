#include "ctrz/classes.hpp"

#include <algorithm>
#include <numeric>

#include "ctrz/error.hpp"

namespace ctrz {

std::size_t ClassSet::power_map(long long t, std::size_t c) const {
  auto e = static_cast<long long>(power_maps_.size());
  long long r = ((t % e) + e) % e;
  return power_maps_[static_cast<std::size_t>(r)][c];
}

ClassSet conjugacy_classes(const FiniteGroup& g) {
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> orbit_of(g.order(), kUnassigned);
  std::vector<ConjugacyClass> found;

  std::vector<Permutation> gen_inverses;
  for (const auto& gen : g.generators()) gen_inverses.push_back(gen.inverse());

  for (std::size_t start = 0; start < g.order(); ++start) {
    if (orbit_of[start] != kUnassigned) continue;
    const std::size_t id = found.size();
    ConjugacyClass cls;
    cls.members.push_back(start);
    orbit_of[start] = id;
    for (std::size_t head = 0; head < cls.members.size(); ++head) {
      const Permutation& x = g.element(cls.members[head]);
      for (std::size_t k = 0; k < g.generators().size(); ++k) {
        std::size_t y = g.index(gen_inverses[k] * x * g.generators()[k]);
        if (orbit_of[y] != kUnassigned) continue;
        orbit_of[y] = id;
        cls.members.push_back(y);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.size = cls.members.size();
    cls.representative = g.element(cls.members.front());
    for (auto m : cls.members)
      if (g.element(m) < cls.representative) cls.representative = g.element(m);
    cls.element_order = cls.representative.order();
    found.push_back(std::move(cls));
  }

  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = found[a];
    const auto& y = found[b];
    if (x.size != y.size) return x.size < y.size;
    if (x.element_order != y.element_order) return x.element_order < y.element_order;
    return x.representative < y.representative;
  });

  ClassSet cs;
  std::vector<std::size_t> rank(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = i;
    cs.classes_.push_back(std::move(found[order[i]]));
  }
  cs.class_of_.resize(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) cs.class_of_[x] = rank[orbit_of[x]];

  const auto exponent = static_cast<std::size_t>(g.exponent());
  cs.power_maps_.assign(exponent, std::vector<std::size_t>(cs.count()));
  for (std::size_t c = 0; c < cs.count(); ++c) {
    Permutation power(g.degree());
    const Permutation& rep = cs.classes_[c].representative;
    for (std::size_t t = 0; t < exponent; ++t) {
      cs.power_maps_[t][c] = cs.class_of_[g.index(power)];
      power = power * rep;
    }
  }
  return cs;
}

std::uint64_t centralizer_order(const FiniteGroup& g, const ClassSet& cs, std::size_t c) {
  if (c >= cs.count()) throw InputError("class index out of range");
  return g.order() / cs[c].size;
}

}  // namespace ctrz
