#include "fixtures.hpp"

#include "ctrz/dixon.hpp"

namespace fx {

namespace {

Fixture make(const std::string& name) {
  auto spec = ctrz::load_builtin_group(name);
  auto g = ctrz::build_group(spec);
  auto cs = ctrz::conjugacy_classes(g);
  auto t = ctrz::compute_character_table(g, cs);
  auto chi = ctrz::permutation_character(g, cs, t);
  t = ctrz::align_to_published_rows(t, chi, name);
  return Fixture{std::move(spec), std::move(g), std::move(cs), std::move(t), std::move(chi)};
}

}  // namespace

const Fixture& g8() {
  static const Fixture f = make("g1344-deg8");
  return f;
}

const Fixture& h14() {
  static const Fixture f = make("g1344-deg14");
  return f;
}

}  // namespace fx
