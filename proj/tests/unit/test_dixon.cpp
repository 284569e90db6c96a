#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "ctrz/dixon.hpp"
#include "ctrz/error.hpp"
#include "ctrz/modp.hpp"
#include "fixtures.hpp"

using namespace ctrz;

namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Smallest prime p ≡ 1 mod e with p² > 4·order, by plain scanning.
std::uint64_t scan_prime(std::uint64_t e, std::uint64_t order) {
  for (std::uint64_t p = 2;; ++p)
    if (p % e == 1 % e && p * p > 4 * order && trial_division_prime(p)) return p;
}

}  // namespace

TEST_SUITE("modp") {

TEST_CASE("primes and roots") {
  for (std::uint64_t n = 0; n < 2000; ++n) CHECK(is_prime(n) == trial_division_prime(n));
  CHECK(pow_mod(3, 336, 337) == 1);
  CHECK(inverse_mod(5, 337) * 5 % 337 == 1);
  const auto g = primitive_root(337);
  for (std::uint64_t k = 1; k < 336; ++k)
    if (336 % k == 0) CHECK(pow_mod(g, k, 337) != 1);
}

TEST_CASE("nullspace and determinant") {
  PrimeFieldMatrix m(7, 2, 3);
  m.set(0, 0, 1);
  m.set(0, 1, 2);
  m.set(0, 2, 3);
  m.set(1, 0, 2);
  m.set(1, 1, 4);
  m.set(1, 2, 6);
  auto ns = nullspace_mod_p(m);
  CHECK(ns.size() == 2);
  for (const auto& v : ns)
    for (auto x : m.apply(v)) CHECK(x == 0);

  PrimeFieldMatrix sq(11, 2, 2);
  sq.set(0, 0, 3);
  sq.set(0, 1, -1);
  sq.set(1, 0, 4);
  sq.set(1, 1, 2);
  CHECK(sq.determinant() == 10);  // 6 + 4
  CHECK(nullspace_mod_p(sq).empty());
}

TEST_CASE("nullspace edge cases") {
  PrimeFieldMatrix id(5, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.set(i, i, 1);
  CHECK(nullspace_mod_p(id).empty());
  PrimeFieldMatrix zero(5, 3, 3);
  auto ns = nullspace_mod_p(zero);
  REQUIRE(ns.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(ns[i][j] == (i == j ? 1u : 0u));
}

TEST_CASE("echelon basis drops dependent vectors") {
  auto b = echelon_basis({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}, 13);
  CHECK(b.size() == 2);
}

}

TEST_SUITE("dixon") {

TEST_CASE("prime choice matches an independent scan") {
  CHECK(choose_prime(84, 1344) == 337);
  CHECK(choose_prime(84, 1344) == scan_prime(84, 1344));
  CHECK(choose_prime(168, 1344) == 337);
  CHECK(choose_prime(2, 2) == 3);
  CHECK(choose_prime(1, 1) == 3);
  for (std::uint64_t e : {1u, 2u, 4u, 6u, 12u, 30u})
    for (std::uint64_t order : {1u, 2u, 6u, 24u, 120u})
      CHECK(choose_prime(e, order) == scan_prime(e, order));
}

TEST_CASE("class algebra invariants") {
  for (const auto* f : {&fx::g8(), &fx::h14()}) {
    const auto ca = class_constants(f->group, f->classes);
    const std::size_t r = ca.r;
    REQUIRE(r == 11);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        // Σ_k a_ijk |C_k| = |C_i| |C_j|
        std::uint64_t lhs = 0;
        for (std::size_t k = 0; k < r; ++k) lhs += ca.coefficient(i, j, k) * ca.sizes[k];
        CHECK(lhs == ca.sizes[i] * ca.sizes[j]);
        // identity class acts as the unit
        CHECK(ca.coefficient(0, i, j) == (i == j ? 1u : 0u));
      }
    for (std::size_t i = 0; i < r; ++i) CHECK(ca.coefficient(i, ca.inverse_class[i], 0) == ca.sizes[i]);
  }
}

TEST_CASE("common eigenvectors") {
  const auto& f = fx::g8();
  const auto ca = class_constants(f.group, f.classes);
  const auto ed = common_eigenbasis(ca, 337);
  REQUIRE(ed.eigenvectors.size() == 11);
  for (std::size_t c = 0; c < 11; ++c) {
    CHECK(ed.eigenvectors[c][0] == 1);
    for (std::size_t i = 0; i < 11; ++i) {
      const auto mv = ca.matrix_mod_p(i, 337).apply(ed.eigenvectors[c]);
      for (std::size_t j = 0; j < 11; ++j) CHECK(mv[j] == ed.eigenvalues[c][i] * ed.eigenvectors[c][j] % 337);
    }
  }
}

TEST_CASE("central characters reduce to the eigenvalues") {
  // ω_i = |C_i| χ(C_i) / χ(1) for each irreducible χ, read mod p.
  const auto& f = fx::h14();
  const auto ca = class_constants(f.group, f.classes);
  const auto ed = common_eigenbasis(ca, 337);
  const auto& t = f.table;
  const auto id = t.identity_class();
  std::multiset<std::vector<std::uint64_t>> from_table, from_eigen;
  for (std::size_t row = 0; row < t.character_count(); ++row) {
    std::vector<std::uint64_t> w;
    for (std::size_t c = 0; c < t.class_count(); ++c)
    {
      const auto z = t.values[row][c] * BigRational(static_cast<long>(t.classes[c].size)) / t.values[row][id];
      w.push_back(reduce_mod_p(z, 337, root_of_unity_mod_p(z.conductor(), 337)));
    }
    from_table.insert(w);
  }
  for (const auto& v : ed.eigenvalues) from_eigen.insert(v);
  CHECK(from_table == from_eigen);
}

TEST_CASE("small tables") {
  auto c2 = FiniteGroup::generate({parse_cycles("(1,2)", 2)});
  auto t2 = compute_character_table(c2);
  REQUIRE(t2.character_count() == 2);
  CHECK(t2.values[0][0] == Cyclotomic(1));
  CHECK(t2.values[0][1] == Cyclotomic(1));
  CHECK(t2.values[1][0] == Cyclotomic(1));
  CHECK(t2.values[1][1] == Cyclotomic(-1));

  auto c3 = FiniteGroup::generate({parse_cycles("(1,2,3)", 3)});
  auto t3 = compute_character_table(c3);
  REQUIRE(t3.character_count() == 3);
  CHECK(t3.conductor % 3 == 0);
  std::set<std::string> shown;
  for (std::size_t i = 0; i < 3; ++i) shown.insert(display(t3.values[i][1]));
  CHECK(shown.count("1") == 1);
  CHECK(shown.count("(-1+sqrt(-3))/2") == 1);
  CHECK(shown.count("(-1-sqrt(-3))/2") == 1);

  auto s4 = FiniteGroup::generate({parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,2)", 4)});
  auto t4 = compute_character_table(s4);
  CHECK(t4.verified);
  std::multiset<BigInt> degs;
  for (const auto& d : t4.degrees()) degs.insert(d);
  CHECK(degs == std::multiset<BigInt>{1, 1, 2, 3, 3});
}

TEST_CASE("class labels") {
  auto labels = class_labels(fx::g8().classes);
  CHECK(labels.front() == "1a");
  CHECK(std::count(labels.begin(), labels.end(), "7a") == 1);
  CHECK(std::count(labels.begin(), labels.end(), "7b") == 1);
}

}
