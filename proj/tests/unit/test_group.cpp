#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ctrz/datasets.hpp"
#include "ctrz/error.hpp"
#include "ctrz/orbits.hpp"
#include "fixtures.hpp"

using namespace ctrz;

namespace {

std::multiset<std::uint64_t> sizes(const ClassSet& cs) {
  std::multiset<std::uint64_t> s;
  for (const auto& c : cs.classes()) s.insert(c.size);
  return s;
}

// Brute-force centralizer of one element.
std::size_t centralizer_brute(const FiniteGroup& g, const Permutation& x) {
  std::size_t n = 0;
  for (const auto& y : g.elements())
    if (x * y == y * x) ++n;
  return n;
}

// Orbits on ordered pairs by plain BFS, no union-find.
std::size_t pair_orbits(const FiniteGroup& g) {
  const std::size_t n = g.degree();
  std::vector<bool> seen(n * n, false);
  std::size_t orbits = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[a * n + b]) continue;
      ++orbits;
      for (const auto& x : g.elements()) seen[x(a) * n + x(b)] = true;
    }
  return orbits;
}

}  // namespace

TEST_SUITE("group") {

TEST_CASE("builtin groups have order 1344") {
  CHECK(fx::g8().group.order() == 1344);
  CHECK(fx::h14().group.order() == 1344);
  CHECK(fx::g8().group.degree() == 8);
  CHECK(fx::h14().group.degree() == 14);
  CHECK(fx::g8().spec.generators.size() == 4);
  CHECK(fx::h14().spec.generators.size() == 2);
}

TEST_CASE("generators as printed for the degree-14 group give a different group") {
  GroupSpec spec = load_builtin_group("g1344-deg14");
  spec.generators[0] = "(1,2,3,4,5,6)(14,13,12,11,10,9,8)";
  spec.order.reset();
  // closure runs past 1344 elements
  CHECK_THROWS_AS(build_group(spec, 1400), InputError);
}

TEST_CASE("recorded order must match") {
  GroupSpec spec = load_builtin_group("g1344-deg8");
  spec.order = 1000;
  CHECK_THROWS_AS(build_group(spec), InputError);
  CHECK_THROWS_AS(load_builtin_group("nonexistent"), InputError);
}

TEST_CASE("element cap") {
  GroupSpec spec = load_builtin_group("g1344-deg8");
  CHECK_THROWS_AS(build_group(spec, 100), InputError);
}

TEST_CASE("small groups") {
  auto s3 = FiniteGroup::generate({parse_cycles("(1,2)", 3), parse_cycles("(1,2,3)", 3)});
  CHECK(s3.order() == 6);
  auto cs = conjugacy_classes(s3);
  CHECK(cs.count() == 3);
  CHECK(sizes(cs) == std::multiset<std::uint64_t>{1, 2, 3});
  CHECK(FiniteGroup::generate({parse_cycles("(1,2)", 2)}).order() == 2);
  CHECK_THROWS_AS(FiniteGroup::generate({parse_cycles("(1,2)", 2), parse_cycles("(1,2)", 3)}), InputError);
  auto trivial = FiniteGroup::generate({Permutation(1)});
  CHECK(trivial.order() == 1);
  CHECK(conjugacy_classes(trivial).count() == 1);
}

TEST_CASE("class sizes of both groups") {
  const std::multiset<std::uint64_t> expected{1, 7, 42, 42, 84, 168, 168, 192, 192, 224, 224};
  for (const auto* f : {&fx::g8(), &fx::h14()}) {
    CHECK(f->classes.count() == 11);
    CHECK(sizes(f->classes) == expected);
  }
}

TEST_CASE("element orders and centralizer orders") {
  const auto& f = fx::g8();
  std::multiset<std::uint64_t> orders;
  for (std::size_t c = 0; c < f.classes.count(); ++c) {
    orders.insert(f.classes[c].element_order);
    if (f.classes[c].size == 192) CHECK(centralizer_order(f.group, f.classes, c) == 7);
    if (f.classes[c].element_order == 3) CHECK(centralizer_order(f.group, f.classes, c) == 6);
  }
  CHECK(orders == std::multiset<std::uint64_t>{1, 2, 2, 2, 3, 4, 4, 4, 6, 7, 7});
  CHECK(centralizer_order(f.group, f.classes, 0) == 1344);
}

TEST_CASE("classes partition the group and agree with brute-force centralizers") {
  for (const auto* f : {&fx::g8(), &fx::h14()}) {
    const auto& g = f->group;
    const auto& cs = f->classes;
    std::size_t total = 0;
    for (std::size_t c = 0; c < cs.count(); ++c) {
      total += cs[c].size;
      CHECK(centralizer_brute(g, cs[c].representative) == centralizer_order(g, cs, c));
      CHECK((g.order() / cs[c].size) % cs[c].element_order == 0);
      CHECK(cs[c].representative.order() == cs[c].element_order);
      for (auto m : cs[c].members) CHECK(cs.class_of(m) == c);
    }
    CHECK(total == g.order());
    CHECK(cs[0].size == 1);
    CHECK(cs[0].representative.is_identity());
  }
}

TEST_CASE("power maps") {
  CHECK(fx::g8().classes.exponent() == 84);
  CHECK(fx::h14().classes.exponent() == 168);
  for (const auto* f : {&fx::g8(), &fx::h14()}) {
    const auto& g = f->group;
    const auto& cs = f->classes;
    for (std::size_t c = 0; c < cs.count(); ++c) {
      for (long long t : {-1LL, 2LL, 3LL, 5LL, 7LL, 169LL}) {
        const auto image = cs[c].representative.pow(t);
        CHECK(cs.power_map(t, c) == cs.class_of(g.index(image)));
      }
      CHECK(cs.power_map(0, c) == 0);
      CHECK(cs.power_map(1, c) == c);
    }
  }
}

TEST_CASE("the two order-7 classes are mutually inverse in both groups") {
  for (const auto* f : {&fx::g8(), &fx::h14()}) {
    const auto& cs = f->classes;
    std::vector<std::size_t> sevens;
    for (std::size_t c = 0; c < cs.count(); ++c)
      if (cs[c].element_order == 7) sevens.push_back(c);
    REQUIRE(sevens.size() == 2);
    CHECK(cs.inverse_class(sevens[0]) == sevens[1]);
  }
}

TEST_CASE("orbit counts: direct, Burnside and a BFS oracle") {
  struct Row { const fx::Fixture* f; unsigned t; long expected; };
  for (const auto& r : {Row{&fx::g8(), 2, 2}, Row{&fx::g8(), 4, 16}, Row{&fx::h14(), 2, 3}, Row{&fx::h14(), 4, 82}}) {
    const auto direct = orbit_count_tuples(r.f->group, r.f->classes, r.t, OrbitMethod::direct);
    const auto burnside = orbit_count_tuples(r.f->group, r.f->classes, r.t, OrbitMethod::burnside);
    CHECK(direct == r.expected);
    CHECK(burnside == r.expected);
  }
  CHECK(pair_orbits(fx::g8().group) == 2);
  CHECK(pair_orbits(fx::h14().group) == 3);
  // one point: a single orbit for transitive groups
  CHECK(orbit_count_tuples(fx::g8().group, fx::g8().classes, 1, OrbitMethod::direct) == 1);
  CHECK(orbit_count_tuples(fx::h14().group, fx::h14().classes, 1, OrbitMethod::burnside) == 1);
}

TEST_CASE("direct orbit count respects the tuple cap") {
  CHECK_THROWS_AS(orbit_count_tuples(fx::h14().group, fx::h14().classes, 4, OrbitMethod::direct, 1000), InputError);
}

}
