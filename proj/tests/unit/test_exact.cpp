#include <doctest.h>

#include <random>

#include "ctrz/cyclotomic.hpp"
#include "ctrz/error.hpp"
#include "ctrz/polynomial.hpp"
#include "ctrz/rational.hpp"

using namespace ctrz;

namespace {

Cyclotomic random_element(std::mt19937& rng, unsigned e) {
  const auto deg = CyclotomicField::get(e)->degree();
  std::vector<BigRational> c(deg);
  for (auto& x : c) {
    const long num = static_cast<long>(rng() % 21) - 10;
    const long den = 1 + static_cast<long>(rng() % 5);
    x = BigRational(num, den);
    x.canonicalize();
  }
  return Cyclotomic::from_coeffs(e, c);
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-7/14") == BigRational(-1, 2));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(require_integer(BigRational(1, 3), "x"), ValidationError);
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(7) == 6);
  CHECK(euler_phi(84) == 24);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(to_string(cyclotomic_polynomial(7)) == "x^6 + x^5 + x^4 + x^3 + x^2 + x + 1");
  CHECK(to_string(cyclotomic_polynomial(4)) == "x^2 + 1");
  CHECK(to_string(cyclotomic_polynomial(1)) == "x - 1");
  // Π_{d | 84} Φ_d = x^84 - 1
  IntPoly prod{1};
  for (unsigned d = 1; d <= 84; ++d)
    if (84 % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
  IntPoly target(85, 0);
  target[0] = -1;
  target[84] = 1;
  CHECK(prod == target);
  CHECK(cyclotomic_polynomial(84).size() == 25);
  CHECK_THROWS_AS(cyclotomic_polynomial(2000), InputError);
  CHECK_THROWS_AS(cyclotomic_polynomial(0), InputError);
}

TEST_CASE("roots of unity") {
  auto z = Cyclotomic::zeta(84);
  CHECK(z.pow(84) == Cyclotomic(1));
  CHECK(!(z.pow(42) == Cyclotomic(1)));
  CHECK(z.pow(42) == Cyclotomic(-1));
  CHECK(Cyclotomic::zeta(84, 12) == Cyclotomic::zeta(7));
  CHECK(Cyclotomic::zeta(4) * Cyclotomic::zeta(4) == Cyclotomic(-1));
  // the e-th roots sum to zero
  Cyclotomic s;
  for (int k = 0; k < 7; ++k) s += Cyclotomic::zeta(7, k);
  CHECK(s.is_zero());
}

TEST_CASE("quadratic period for 7 against a convolution oracle") {
  // g = ζ + ζ² + ζ⁴; multiply g by conj(g) as integer vectors modulo x^7 - 1.
  int g[7] = {0, 1, 1, 0, 1, 0, 0};
  int gc[7] = {0, 0, 0, 1, 0, 1, 1};
  int prod[7] = {0};
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) prod[(i + j) % 7] += g[i] * gc[j];
  // Σ ζ^k = 0, so the product is prod[0] - prod[1] when the other coefficients agree
  for (int k = 2; k < 7; ++k) REQUIRE(prod[k] == prod[1]);
  const int norm = prod[0] - prod[1];
  CHECK(norm == 2);

  Cyclotomic period = Cyclotomic::zeta(7, 1) + Cyclotomic::zeta(7, 2) + Cyclotomic::zeta(7, 4);
  CHECK(period * period.conj() == Cyclotomic(norm));
  CHECK(period + period.conj() == Cyclotomic(-1));

  auto q = to_quadratic(period, -7);
  REQUIRE(q.has_value());
  CHECK(q->a == BigRational(-1, 2));
  CHECK(q->b == BigRational(1, 2));
  CHECK(display(period) == "(-1+sqrt(-7))/2");
  CHECK(display(period.conj()) == "(-1-sqrt(-7))/2");
  CHECK(from_quadratic(*q, 7) == period);
  auto s = sqrt_embedding(-7, 7);
  REQUIRE(s.has_value());
  CHECK(*s * *s == Cyclotomic(-7));
}

TEST_CASE("quadratic views") {
  auto three = to_quadratic(Cyclotomic(3), -7);
  REQUIRE(three.has_value());
  CHECK(three->a == 3);
  CHECK(three->b == 0);
  CHECK_FALSE(find_quadratic(Cyclotomic::zeta(84)).has_value());
  CHECK(display(Cyclotomic(BigRational(-3, 4))) == "-3/4");
  auto i = find_quadratic(Cyclotomic::zeta(4));
  REQUIRE(i.has_value());
  CHECK(i->D == -1);
  CHECK(i->b == 1);
}

TEST_CASE("field axioms at conductor 84") {
  std::mt19937 rng(84);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = random_element(rng, 84);
    auto b = random_element(rng, 84);
    auto c = random_element(rng, 84);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a - a == Cyclotomic());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Cyclotomic(1));
      CHECK((b / a) * a == b);
    }
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).galois(5) == a.galois(5) + b.galois(5));
    CHECK((a * a.conj()).conj() == a * a.conj());
  }
}

TEST_CASE("mixed conductors") {
  auto x = Cyclotomic::zeta(7) + Cyclotomic::zeta(3);
  CHECK(x.conductor() % 21 == 0);
  CHECK(x - Cyclotomic::zeta(3) == Cyclotomic::zeta(7));
  CHECK(Cyclotomic::zeta(3) * BigRational(2) == Cyclotomic::zeta(3) + Cyclotomic::zeta(3));
  CHECK(Cyclotomic(84, BigRational(5)) == Cyclotomic(5));
  CHECK(Cyclotomic(84, BigRational(5)).is_rational());
  CHECK(Cyclotomic(84, BigRational(5)).rational() == 5);
  CHECK_THROWS_AS(Cyclotomic::zeta(7).rational(), ValidationError);
  CHECK_THROWS(Cyclotomic().inverse());
}

}
