#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "afinv/algebraic.hpp"
#include "afinv/error.hpp"
#include "afinv/intpoly.hpp"

using namespace afinv;

namespace {

IntPoly P(std::vector<long> c) {
  std::vector<Int> v(c.begin(), c.end());
  return IntPoly(std::move(v));
}

} // namespace

TEST_CASE("divmod by a unit-constant divisor") {
  // f = 1 + 4x^2 divided by 1 - 2x; long division gives q = -1 - 2x, r = 2,
  // re-checked through f = q*g + r.
  IntPoly f = P({1, 0, 4}), g = P({1, -2});
  auto [q, r] = poly_divmod(f, g);
  CHECK(q == P({-1, -2}));
  CHECK(r == P({2}));
  CHECK(q * g + r == f);
}

TEST_CASE("divmod with zero remainder") {
  IntPoly f = P({-1, 1, 0, 4}); // 4x^3 + x - 1
  IntPoly g = P({1, -2});
  auto [q, r] = poly_divmod(f, g);
  CHECK(r.is_zero());
  CHECK(q == P({-1, -1, -2})); // -(2x^2 + x + 1)
  CHECK(q * g == f);
}

TEST_CASE("divmod by one") {
  IntPoly f = P({3, -1, 7});
  auto [q, r] = poly_divmod(f, P({1}));
  CHECK(q == f);
  CHECK(r.is_zero());
}

TEST_CASE("divmod rejects non-integral quotients") {
  CHECK_THROWS_AS((void)poly_divmod(P({0, 1}), P({1, 2})), Error);
  CHECK_THROWS_AS((void)poly_divmod(P({1}), IntPoly()), Error);
}

TEST_CASE("divmod identity on random pairs with unit-leading divisors") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Int> fc(1 + rng() % 7), gc(1 + rng() % 4);
    for (Int& x : fc) x = long(rng() % 11) - 5;
    for (Int& x : gc) x = long(rng() % 11) - 5;
    gc.back() = (rng() % 2) ? 1 : -1; // monic up to sign: division stays integral
    IntPoly f{std::move(fc)}, g{std::move(gc)};
    auto [q, r] = poly_divmod(f, g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
  }
}

TEST_CASE("degree sentinel for the zero polynomial") {
  CHECK(IntPoly().degree() == IntPoly::kZeroDegree);
  // deg(f g) = deg f + deg g also when one factor is zero
  IntPoly f = P({1, 2, 1});
  CHECK((IntPoly() * f).degree() == IntPoly::kZeroDegree + f.degree());
}

TEST_CASE("factorization of x^5 + x - 1") {
  Factorization fac = factor_over_Z(P({-1, 1, 0, 0, 0, 1}));
  CHECK(fac.content == 1);
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].first == P({1, -1, 1}));    // x^2 - x + 1
  CHECK(fac.factors[1].first == P({-1, 0, 1, 1})); // x^3 + x^2 - 1
  CHECK(fac.reassemble() == P({-1, 1, 0, 0, 0, 1}));
}

TEST_CASE("degree one is irreducible") {
  Factorization fac = factor_over_Z(P({-1, 2}));
  REQUIRE(fac.factors.size() == 1);
  CHECK(fac.factors[0].first == P({-1, 2}));
  CHECK(fac.factors[0].second == 1);
}

TEST_CASE("factorization of 4x^3 + x - 1") {
  Factorization fac = factor_over_Z(P({-1, 1, 0, 4}));
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].first == P({-1, 2}));
  CHECK(fac.factors[1].first == P({1, 1, 2}));
  CHECK(fac.reassemble() == P({-1, 1, 0, 4}));
}

TEST_CASE("factorization handles content, sign and multiplicity") {
  // -6 (x-1)^2 (x^2+x+1)
  IntPoly f = P({-1, 1}) * P({-1, 1}) * P({1, 1, 1}) * Int(-6);
  Factorization fac = factor_over_Z(f);
  CHECK(fac.content == -6);
  CHECK(fac.reassemble() == f);
  bool squared = false;
  for (const auto& [g, e] : fac.factors)
    if (g == P({-1, 1})) squared = (e == 2);
  CHECK(squared);
  for (const auto& [g, e] : fac.factors) CHECK(g.leading() > 0);
}

TEST_CASE("factorization round-trip over random products") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    IntPoly f = P({1});
    int parts = 1 + int(rng() % 3);
    for (int i = 0; i < parts; ++i) {
      std::vector<Int> c(2 + rng() % 3);
      for (Int& x : c) x = long(rng() % 7) - 3;
      if (c.back() == 0) c.back() = 1;
      f = f * IntPoly(std::move(c));
    }
    if (f.is_zero() || f.degree() < 1 || f.degree() > 12) continue;
    Factorization fac = factor_over_Z(f);
    CHECK(fac.reassemble() == f);
    for (const auto& [g, e] : fac.factors) {
      CHECK(g.content() == 1);
      CHECK(g.leading() > 0);
      CHECK(e >= 1);
    }
  }
}

TEST_CASE("degree bound is enforced") {
  std::vector<Int> big(18, Int(1));
  CHECK_THROWS_AS((void)factor_over_Z(IntPoly(std::move(big))), Error);
}

TEST_CASE("isolating the golden-ratio root") {
  AlgebraicReal a = isolate_positive_root(P({-1, 1, 1})); // x + x^2 - 1
  CHECK_FALSE(a.is_rational());
  CHECK(a.minpoly() == P({-1, 1, 1}));
  CHECK(a.approx() == doctest::Approx(0.6180339887).epsilon(1e-9));
}

TEST_CASE("isolating a rational root") {
  AlgebraicReal a = isolate_positive_root(P({-1, 2}));
  REQUIRE(a.is_rational());
  CHECK(a.rational_value() == make_rat(1, 2));
}

TEST_CASE("isolating the root of x^2 + x^3 - 1") {
  AlgebraicReal a = isolate_positive_root(P({-1, 0, 1, 1}));
  CHECK(a.minpoly() == P({-1, 0, 1, 1}));
  CHECK(a.approx() == doctest::Approx(0.7548776662).epsilon(1e-9));
}

TEST_CASE("no root in the unit interval") {
  CHECK_THROWS_AS((void)isolate_positive_root(P({1, 1})), Error);
}

TEST_CASE("minpoly of the isolated root divides p_L") {
  // p_L for L = {4,4,5,8}: the minimal polynomial is the cubic factor
  IntPoly pl = P({-1, 0, 0, 0, 2, 1, 0, 0, 1});
  AlgebraicReal a = isolate_positive_root(pl);
  CHECK(a.minpoly() == P({-1, 0, 1, 1}));
  auto [q, r] = poly_divmod(pl, a.minpoly());
  CHECK(r.is_zero());
  CHECK(q * a.minpoly() == pl);
}

TEST_CASE("reduce_mod") {
  CHECK(reduce_mod(P({1, 1, 2}), 2) == P({1, 1}));
  CHECK(reduce_mod(P({1, 2, 2}), 2) == P({1}));
  CHECK(reduce_mod(P({-1, -3}), 2) == P({1, 1}));
  CHECK_THROWS_AS((void)reduce_mod(P({1}), 1), Error);
}

TEST_CASE("exact comparison of algebraic reals") {
  IntPoly golden = P({-1, 1, 1});
  AlgebraicReal a1 = isolate_positive_root(golden);
  // second copy over a wider isolating interval
  AlgebraicReal a2(golden, make_rat(1, 100), Rat(1));
  CHECK(a1.compare(a2) == 0);
  // the conjugate root of the same polynomial is a different number
  AlgebraicReal conj(golden, Rat(-2), Rat(-1));
  CHECK(a1.compare(conj) > 0);
  CHECK(conj.compare(a1) < 0);
  CHECK(a1.compare(make_rat(1, 2)) > 0);
  CHECK(a1.compare(make_rat(2, 3)) < 0);

  AlgebraicReal sqrt2(P({-2, 0, 1}), Rat(1), Rat(2));
  CHECK(a1.compare(sqrt2) < 0);
}

TEST_CASE("refinement never changes comparison outcomes") {
  AlgebraicReal a = isolate_positive_root(P({-1, 0, 1, 1}));
  AlgebraicReal b = isolate_positive_root(P({-1, 1, 1}));
  int before = a.compare(b);
  a.refine_to(make_rat(1, Int(1) << 200));
  b.refine_to(make_rat(1, Int(1) << 200));
  CHECK(a.compare(b) == before);
  CHECK(before > 0); // 0.7549 > 0.6180
}

TEST_CASE("field arithmetic in Q(a)") {
  AlgebraicReal a = isolate_positive_root(P({-1, 1, 1})); // a^2 = 1 - a
  FieldElem x = FieldElem::generator(a);
  FieldElem one = FieldElem::from_rational(a, Rat(1));
  CHECK(x * x == one - x);
  CHECK((x.inverse() * x) == one);
  // 1/a = a + 1 for the golden ratio equation
  CHECK(x.inverse() == x + one);
  CHECK((x * x * x).sign() > 0);
  CHECK((x - one).sign() < 0);
  CHECK(FieldElem::from_rational(a, Rat(0)).sign() == 0);
}

TEST_CASE("field elements print and approximate") {
  AlgebraicReal a = isolate_positive_root(P({-1, 1, 1}));
  FieldElem x = FieldElem::generator(a);
  FieldElem e = FieldElem::from_rational(a, Rat(2)) - x;
  CHECK(e.str() == "-a+2");
  CHECK(e.approx() == doctest::Approx(1.3819660).epsilon(1e-6));
}
