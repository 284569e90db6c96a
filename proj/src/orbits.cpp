#include "ctrz/orbits.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "ctrz/error.hpp"

namespace ctrz {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

mpz_class count_direct(const FiniteGroup& g, unsigned t, std::size_t tuple_cap) {
  const std::size_t n = g.degree();
  std::size_t total = 1;
  for (unsigned i = 0; i < t; ++i) {
    if (total > tuple_cap / n) throw InputError("tuple count exceeds cap of " + std::to_string(tuple_cap));
    total *= n;
  }
  DisjointSets sets(total);
  std::size_t components = total;
  std::vector<std::size_t> digits(t);
  for (const auto& gen : g.generators()) {
    for (std::size_t code = 0; code < total; ++code) {
      // tuple digits are little-endian base n
      std::size_t rest = code;
      std::size_t image = 0;
      std::size_t scale = 1;
      for (unsigned i = 0; i < t; ++i) {
        image += gen(static_cast<std::uint32_t>(rest % n)) * scale;
        rest /= n;
        scale *= n;
      }
      if (sets.unite(code, image)) --components;
    }
  }
  return mpz_class(static_cast<unsigned long>(components));
}

mpz_class count_burnside(const FiniteGroup& g, const ClassSet& cs, unsigned t) {
  mpz_class sum = 0;
  for (const auto& cls : cs.classes()) {
    mpz_class fixed;
    mpz_ui_pow_ui(fixed.get_mpz_t(), fixed_point_count(cls.representative), t);
    sum += fixed * static_cast<unsigned long>(cls.size);
  }
  mpz_class order(static_cast<unsigned long>(g.order()));
  if (!mpz_divisible_p(sum.get_mpz_t(), order.get_mpz_t()))
    throw InconsistencyError("Burnside sum is not divisible by the group order");
  return sum / order;
}

}  // namespace

mpz_class orbit_count_tuples(const FiniteGroup& g, const ClassSet& cs, unsigned t,
                             OrbitMethod method, std::size_t tuple_cap) {
  if (t == 0) return 1;
  return method == OrbitMethod::direct ? count_direct(g, t, tuple_cap) : count_burnside(g, cs, t);
}

}  // namespace ctrz
