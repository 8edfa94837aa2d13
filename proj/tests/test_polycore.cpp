// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "test_util.hpp"

using namespace lch;
using namespace lch::testutil;

TEST_CASE("prime field arithmetic") {
  CoeffField F = CoeffField::prime(5);
  CHECK(F.eq(F.mul(F.from_int(3), F.from_int(2)), F.one()));
  CHECK(F.eq(F.add(F.from_int(4), F.from_int(3)), F.from_int(2)));
  CHECK(F.eq(F.neg(F.from_int(2)), F.from_int(3)));
  CHECK(F.eq(F.inv(F.from_int(2)), F.from_int(3)));
  CHECK(F.is_zero(F.sub(F.from_int(7), F.from_int(2))));
  CHECK_THROWS_AS(CoeffField::prime(6), Error);
  CHECK_THROWS_AS(CoeffField::prime(2), Error);
}

TEST_CASE("rational arithmetic") {
  CoeffField F = CoeffField::rationals();
  Coeff half = F.from_rat(BigRat(1, 2));
  Coeff third = F.from_rat(BigRat(1, 3));
  CHECK(F.str(F.add(half, third)) == "5/6");
  CHECK(F.str(F.inv(F.from_int(-4))) == "-1/4");
  CHECK(F.is_one(F.mul(half, F.from_int(2))));
}

TEST_CASE("prime field inverse property") {
  CoeffField F = CoeffField::prime(32003);
  Rng rng(42, "inv-prop");
  for (int i = 0; i < 500; ++i) {
    Coeff a = F.from_int(int64_t(rng.below(32002)) + 1);
    CHECK(F.is_one(F.mul(a, F.inv(a))));
  }
}

TEST_CASE("grevlex order") {
  auto R = qq_ring({"x", "y", "z"});
  auto m = [&](const std::string& s) { return P(R, s).lm(); };
  const auto& ord = R->order();
  CHECK(ord.cmp(m("x^2"), m("x*y")) > 0);
  CHECK(ord.cmp(m("x*y^2"), m("x^2*z")) > 0);
  CHECK(ord.cmp(m("x^3"), m("x*y^2")) > 0);
  CHECK(ord.cmp(m("z"), m("y")) < 0);
  CHECK(ord.cmp(m("x"), m("x")) == 0);
}

TEST_CASE("lex order") {
  auto R = qq_ring({"x", "y", "z"});
  auto m = [&](const std::string& s) { return P(R, s).lm(); };
  MonomialOrder lex = MonomialOrder::lex();
  CHECK(lex.cmp(m("x"), m("y^2")) > 0);
  CHECK(lex.cmp(m("x^2*y"), m("x^2*z")) > 0);
  CHECK(lex.cmp(m("y"), m("z^3")) > 0);
}

TEST_CASE("block elimination order") {
  auto R = qq_ring({"t", "x", "y"});
  auto m = [&](const std::string& s) { return P(R, s).lm(); };
  MonomialOrder blk = MonomialOrder::block_elim(1);
  CHECK(blk.cmp(m("t"), m("x^5*y^5")) > 0);
  CHECK(blk.cmp(m("t*x"), m("t*y^2")) < 0);
  CHECK(blk.cmp(m("x^2"), m("x*y")) > 0);
}

TEST_CASE("order properties") {
  auto R = fp_ring(32003, {"x", "y", "z"});
  const auto& ord = R->order();
  Rng rng(42, "order-prop");
  for (int i = 0; i < 1000; ++i) {
    Monomial a = random_mono(R, rng, 4);
    Monomial b = random_mono(R, rng, 4);
    Monomial c = random_mono(R, rng, 4);
    int ab = ord.cmp(a, b);
    CHECK(ab == -ord.cmp(b, a));
    CHECK((ab == 0) == (a == b));
    CHECK(ord.cmp(a * c, b * c) == ab);
    if (!c.is_one()) CHECK(ord.cmp(a * c, a) > 0);
  }
}

TEST_CASE("normalization") {
  auto R = qq_ring({"x", "y"});
  Monomial x2(2);
  x2[0] = 2;
  const auto& F = R->field();
  Poly f = Poly::from_terms(*R, {{x2, F.from_int(3)}, {x2, F.from_int(-3)}});
  CHECK(f.is_zero());
  Poly g = P(R, "x^2 + x*y + x^2");
  CHECK(S(R, g) == "2*x^2 + x*y");
  Poly h = Poly::from_terms(*R, std::vector<Term>(g.terms()));
  CHECK(poly_eq(*R, g, h));
}

TEST_CASE("ring axioms over both fields") {
  for (auto R : {qq_ring({"x", "y"}), fp_ring(32003, {"x", "y"})}) {
    Rng rng(42, "ring-axioms");
    for (int i = 0; i < 1000; ++i) {
      Poly a = random_poly(R, rng, 4, 3);
      Poly b = random_poly(R, rng, 4, 3);
      Poly c = random_poly(R, rng, 4, 3);
      CHECK(poly_eq(*R, poly_add(*R, a, b), poly_add(*R, b, a)));
      CHECK(poly_eq(*R, poly_add(*R, poly_add(*R, a, b), c),
                    poly_add(*R, a, poly_add(*R, b, c))));
      CHECK(poly_eq(*R, poly_mul(*R, a, b), poly_mul(*R, b, a)));
      CHECK(poly_eq(*R, poly_mul(*R, a, poly_add(*R, b, c)),
                    poly_add(*R, poly_mul(*R, a, b), poly_mul(*R, a, c))));
      CHECK(poly_sub(*R, a, a).is_zero());
      CHECK(poly_eq(*R, poly_mul(*R, poly_mul(*R, a, b), c),
                    poly_mul(*R, a, poly_mul(*R, b, c))));
    }
  }
}

TEST_CASE("printing conventions") {
  auto R13 = fp_ring(13, {"x", "y"});
  CHECK(S(R13, P(R13, "x + 8y")) == "x - 5*y");
  auto R = qq_ring({"x", "y"});
  CHECK(S(R, P(R, "0")) == "0");
  CHECK(S(R, P(R, "-x^2 + 3x*y - 1")) == "-x^2 + 3*x*y - 1");
  CHECK(S(R, P(R, "1/2 x - 1")) == "1/2*x - 1");
  CHECK(S(R, P(R, "(x+y)^2")) == "x^2 + 2*x*y + y^2");
  CHECK(S(R, P(R, "y + x")) == "x + y");
}

TEST_CASE("parser errors") {
  auto R = qq_ring({"x", "y"});
  CHECK_THROWS_AS(P(R, "x +"), Error);
  CHECK_THROWS_AS(P(R, "w + 1"), Error);
  CHECK_THROWS_AS(P(R, "x ^ y"), Error);
  try {
    P(R, "q");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::undeclared_name);
  }
}

TEST_CASE("polynomial helpers") {
  auto R = qq_ring({"x", "y"});
  CHECK(S(R, poly_pow(*R, P(R, "x + y"), 3)) ==
        "x^3 + 3*x^2*y + 3*x*y^2 + y^3");
  auto q = poly_exact_div(*R, P(R, "x^2 - y^2"), P(R, "x - y"));
  REQUIRE(q.has_value());
  CHECK(S(R, *q) == "x + y");
  CHECK(!poly_exact_div(*R, P(R, "x^2 + y"), P(R, "x - y")).has_value());
  CHECK(S(R, poly_derivative(*R, P(R, "x^3 + x*y"), 0)) == "3*x^2 + y");
  CHECK(S(R, poly_subst(*R, P(R, "x^2 + x"), 0, P(R, "y"))) == "y^2 + y");
  CHECK(R->field().str(poly_constant_term(*R, P(R, "x + 7"))) == "7");
  Poly f = P(R, "x^2*y + 2");
  CHECK(f.total_degree() == 3);
  CHECK(poly_support(*R, f) == std::vector<int>{0, 1});
}

TEST_CASE("partial evaluation") {
  auto R = fp_ring(32003, {"x", "y", "z"});
  Poly f = P(R, "x*y + z^2 + x");
  Poly g = poly_eval_partial(*R, f, {{0, R->field().from_int(2)}});
  CHECK(S(R, g) == "z^2 + 2*y + 2");
}
