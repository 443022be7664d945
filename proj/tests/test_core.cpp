#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "resforge/matrix.hpp"
#include "resforge/parse.hpp"
#include "resforge/polynomial.hpp"

#include "oracles.hpp"

#include <random>

using namespace resforge;

namespace {

struct XY {
  VariableRegistry reg;
  int x, y;
  XY() {
    x = reg.add_named("x");
    y = reg.add_named("y");
  }
  Polynomial p(const std::string& s) const { return PolyParser(&reg).parse(s); }
};

}  // namespace

TEST_CASE("rational arithmetic small and big paths") {
  Rational a(2, 4);
  CHECK(a == Rational(1, 2));
  CHECK((a + a).is_one());
  CHECK((a - a).is_zero());
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK((Rational(1, 3) * Rational(3, 7)) == Rational(1, 7));
  CHECK((Rational(1, 3) / Rational(2, 3)) == Rational(1, 2));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));

  // force the big path and demotion back
  Rational big(1);
  for (int i = 0; i < 5; ++i) big *= Rational(1000000007LL);
  Rational inv = Rational(1) / big;
  CHECK((big * inv).is_one());
  CHECK(big.numerator_str().size() > 19);

  // random cross-check against the multiprecision oracle
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> d(-1000000000LL, 1000000000LL);
  for (int t = 0; t < 300; ++t) {
    long long n1 = d(rng), d1 = d(rng), n2 = d(rng), d2 = d(rng);
    if (d1 == 0 || d2 == 0) continue;
    Rational r1(n1, d1), r2(n2, d2);
    BigRational b1(n1), b2(n2);
    b1 /= d1;
    b2 /= d2;
    CHECK((r1 + r2) == Rational(BigRational(b1 + b2)));
    CHECK((r1 - r2) == Rational(BigRational(b1 - b2)));
    CHECK((r1 * r2) == Rational(BigRational(b1 * b2)));
    CHECK((r1 < r2) == (b1 < b2));
  }
}

TEST_CASE("registry roles and skew access") {
  VariableRegistry reg;
  reg.add_matrix_entry(1, 1);
  int b12 = reg.add_defect_b(1, 2);
  reg.add_defect_c(1, 2);
  reg.add_special_z(0);

  CHECK(reg.b_var(1, 2).sign == 1);
  CHECK(reg.b_var(2, 1).sign == -1);
  CHECK(reg.b_var(2, 1).index == b12);
  CHECK(reg.b_var(1, 1).sign == 0);
  CHECK(reg.c_var(2, 1).sign == -1);
  CHECK(reg.c_var(2, 2).sign == 0);
  CHECK(reg.find("Z") >= 0);
  CHECK_THROWS(reg.add_named("Z"));           // duplicate name
  CHECK_THROWS(reg.add_defect_b(3, 2));       // non-canonical indices
  CHECK_THROWS((void)reg.b_var(1, 3));        // not registered
}

TEST_CASE("monomial order: degrevlex and lex") {
  MonomialOrder drl{OrderKind::Degrevlex};
  MonomialOrder lex{OrderKind::Lex};
  auto m = [](std::initializer_list<std::pair<int, int>> ve) {
    Monomial r;
    for (auto [v, e] : ve) r = r * Monomial::variable(v, e);
    return r;
  };
  // x0 > x1 > x2; degrevlex on x^a y^b z^c
  CHECK(drl.cmp(m({{0, 2}}), m({{0, 1}, {1, 1}})) > 0);           // x^2 > xy
  CHECK(drl.cmp(m({{0, 1}, {1, 1}}), m({{1, 2}})) > 0);           // xy > y^2
  CHECK(drl.cmp(m({{1, 2}}), m({{0, 1}, {2, 1}})) > 0);           // y^2 > xz (revlex)
  CHECK(drl.cmp(m({{0, 3}}), m({{0, 1}, {1, 1}})) > 0);           // degree first
  CHECK(lex.cmp(m({{0, 1}}), m({{1, 5}})) > 0);                   // x > y^5 in lex
  CHECK(lex.cmp(m({{0, 1}, {1, 1}}), m({{0, 1}, {2, 1}})) > 0);   // xy > xz
  CHECK(drl.cmp(m({{0, 1}}), m({{0, 1}})) == 0);
}

TEST_CASE("poly_add examples") {
  XY t;
  CHECK(poly_add(t.p("x"), t.p("-x")).is_zero());                    // additive inverse
  CHECK(poly_add(t.p("x+y"), t.p("x-y")) == t.p("2*x"));             // (x+y)+(x-y) = 2x
  VariableRegistry other;
  other.add_named("x");
  CHECK_THROWS((void)poly_add(t.p("x"), Polynomial::variable(&other, 0)));  // registry mismatch
}

TEST_CASE("poly_add matches the naive merge oracle on random 50-term inputs") {
  VariableRegistry reg;
  for (int i = 0; i < 6; ++i) reg.add_named("v" + std::to_string(i));
  std::mt19937_64 rng(42);
  for (int t = 0; t < 60; ++t) {
    Polynomial a = oracles::random_poly(&reg, rng, 50, 5);
    Polynomial b = oracles::random_poly(&reg, rng, 50, 5);
    CHECK(poly_add(a, b) == oracles::naive_add(a, b));
  }
}

TEST_CASE("poly_mul examples and oracle") {
  XY t;
  Polynomial a = t.p("3*x^2*y - y + 7");
  CHECK(poly_mul(a, t.p("1")) == a);                                // identity
  CHECK(poly_mul(t.p("x+y"), t.p("x-y")) == t.p("x^2-y^2"));
  VariableRegistry reg;
  for (int i = 0; i < 5; ++i) reg.add_named("v" + std::to_string(i));
  std::mt19937_64 rng(43);
  for (int tt = 0; tt < 50; ++tt) {
    Polynomial a2 = oracles::random_poly(&reg, rng, 30, 4);
    Polynomial b2 = oracles::random_poly(&reg, rng, 30, 4);
    CHECK(poly_mul(a2, b2) == oracles::naive_mul(a2, b2));
  }
}

TEST_CASE("ring axioms on random samples") {
  VariableRegistry reg;
  for (int i = 0; i < 4; ++i) reg.add_named("v" + std::to_string(i));
  std::mt19937_64 rng(44);
  for (int t = 0; t < 40; ++t) {
    Polynomial a = oracles::random_poly(&reg, rng, 8, 3);
    Polynomial b = oracles::random_poly(&reg, rng, 8, 3);
    Polynomial c = oracles::random_poly(&reg, rng, 8, 3);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a.is_canonical());
    CHECK((a * b).is_canonical());
  }
}

TEST_CASE("poly_substitute examples and homomorphism property") {
  // b(1,2) -> Z
  VariableRegistry src;
  int b12 = src.add_defect_b(1, 2);
  VariableRegistry dst;
  dst.add_special_z(0);
  Substitution s(&src, &dst, "test");
  s.map_var(b12, Polynomial::variable(&dst, dst.z_var(0)));
  CHECK(poly_substitute(Polynomial::variable(&src, b12), s) == Polynomial::variable(&dst, dst.z_var(0)));

  // identity substitution leaves polynomials unchanged
  XY t;
  Substitution ident(&t.reg, &t.reg, "identity");
  Polynomial q = t.p("x^3 - 2*x*y + 5");
  CHECK(poly_substitute(q, ident) == q);

  // x^2 + y at (2,3) = 7
  VariableRegistry cdst;  // constants only
  Substitution eval(&t.reg, &cdst, "eval");
  eval.map_var(t.x, Rational(2));
  eval.map_var(t.y, Rational(3));
  CHECK(poly_substitute(t.p("x^2+y"), eval) == Polynomial::constant(&cdst, 7));

  // unmapped variable absent from target registry
  VariableRegistry only_x;
  only_x.add_named("x");
  Substitution partial(&t.reg, &only_x, "partial");
  CHECK_THROWS((void)poly_substitute(t.p("x+y"), partial));

  // homomorphism: substitute(ab) = substitute(a) substitute(b)
  std::mt19937_64 rng(45);
  VariableRegistry reg;
  for (int i = 0; i < 3; ++i) reg.add_named("w" + std::to_string(i));
  VariableRegistry tgt;
  for (int i = 0; i < 2; ++i) tgt.add_named("u" + std::to_string(i));
  Substitution h(&reg, &tgt, "hom");
  h.map_var(0, PolyParser(&tgt).parse("u0+u1"));
  h.map_var(1, PolyParser(&tgt).parse("u0*u1-2"));
  h.map_var(2, PolyParser(&tgt).parse("3"));
  for (int t2 = 0; t2 < 25; ++t2) {
    Polynomial a = oracles::random_poly(&reg, rng, 6, 3);
    Polynomial b = oracles::random_poly(&reg, rng, 6, 3);
    CHECK(h.apply(a * b) == h.apply(a) * h.apply(b));
    CHECK(h.apply(a + b) == h.apply(a) + h.apply(b));
  }
}

TEST_CASE("determinant examples and oracle") {
  VariableRegistry reg;
  int a = reg.add_named("a"), b = reg.add_named("b"), c = reg.add_named("c"), d = reg.add_named("d");
  PolyMatrix id3(3, 3, &reg);
  for (int i = 0; i < 3; ++i) id3.set(i, i, Polynomial::constant(&reg, 1));
  CHECK(determinant(id3) == Polynomial::constant(&reg, 1));

  PolyMatrix m2(2, 2, &reg);
  m2.set(0, 0, Polynomial::variable(&reg, a));
  m2.set(0, 1, Polynomial::variable(&reg, b));
  m2.set(1, 0, Polynomial::variable(&reg, c));
  m2.set(1, 1, Polynomial::variable(&reg, d));
  CHECK(determinant(m2) == PolyParser(&reg).parse("a*d-b*c"));

  PolyMatrix bad(2, 3, &reg);
  CHECK_THROWS((void)determinant(bad));

  std::mt19937_64 rng(46);
  for (int t = 0; t < 10; ++t) {
    PolyMatrix r = oracles::random_int_matrix(&reg, rng, 5);
    CHECK(determinant(r) == oracles::cofactor_det(r));
  }
}

TEST_CASE("pfaffian examples, errors, and pf^2 = det up to 8x8") {
  VariableRegistry reg;
  int a = reg.add_named("a");
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) reg.add_defect_b(i, j);

  PolyMatrix s2(2, 2, &reg);
  s2.set(0, 1, Polynomial::variable(&reg, a));
  s2.set(1, 0, -Polynomial::variable(&reg, a));
  CHECK(pfaffian(s2) == Polynomial::variable(&reg, a));

  // generic 4x4 skew on b(i,j): P = b12 b34 - b13 b24 + b14 b23
  PolyMatrix s4(4, 4, &reg);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      if (i != j) s4.set(i - 1, j - 1, Polynomial::signed_variable(&reg, reg.b_var(i, j)));
  Polynomial expected = PolyParser(&reg).parse("b(1,2)*b(3,4) - b(1,3)*b(2,4) + b(1,4)*b(2,3)");
  CHECK(pfaffian(s4) == expected);
  CHECK(pfaffian(s4) == oracles::matching_pfaffian(s4));

  PolyMatrix odd(3, 3, &reg);
  CHECK_THROWS((void)pfaffian(odd));
  PolyMatrix notskew(2, 2, &reg);
  notskew.set(0, 1, Polynomial::variable(&reg, a));
  CHECK_THROWS((void)pfaffian(notskew));

  std::mt19937_64 rng(47);
  for (int n = 2; n <= 8; n += 2) {
    for (int t = 0; t < 15; ++t) {
      PolyMatrix sk = oracles::random_skew_int_matrix(&reg, rng, n);
      Polynomial pf = pfaffian(sk);
      CHECK(pf * pf == determinant(sk));
      CHECK(pf == oracles::matching_pfaffian(sk));
    }
  }
}

TEST_CASE("evaluate and parser round-trips") {
  XY t;
  Polynomial p = t.p("x^2*y - 3*x + 1/2");
  std::vector<Rational> pt = {Rational(2), Rational(5)};
  CHECK(p.evaluate(pt) == Rational(2 * 2 * 5) - Rational(6) + Rational(1, 2));
  CHECK(PolyParser(&t.reg).parse(p.str()) == p);
  CHECK_THROWS((void)t.p("x +* y"));
  CHECK_THROWS((void)t.p("unknown_var"));
}
