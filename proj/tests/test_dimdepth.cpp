// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#include "dimdepth.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace lch;
using namespace lch::testutil;

TEST_CASE("dimension filter on prime sets") {
  auto R = fp_ring(32003, {"x", "y", "z"});
  AssSet s;
  s.insert({Ideal(R, {}), 3, true});
  s.insert({ID(R, {"x"}), 2, true});
  s.insert({ID(R, {"x", "y"}), 1, true});
  s.insert({ID(R, {"x", "y", "z"}), 0, true});
  CHECK(filter_dim_ge(s, -1).size() == 4);
  CHECK(filter_dim_ge(s, 0).size() == 4);
  CHECK(filter_dim_ge(s, 1).size() == 3);
  CHECK(filter_dim_ge(s, 2).size() == 2);
  CHECK(filter_dim_ge(s, 4).size() == 0);
}

TEST_CASE("zerodivisor detection") {
  auto R = fp_ring(32003, {"x", "y"});
  auto S1 = ModulePresentation::free_module(R, 1);
  auto Mxy = ModulePresentation::cyclic(ID(R, {"x*y"}));

  CHECK(!is_zerodivisor(P(R, "x"), S1));
  CHECK(is_zerodivisor(poly_zero(), S1));
  CHECK(is_zerodivisor(P(R, "x"), Mxy));
  CHECK(is_zerodivisor(P(R, "y"), Mxy));
  CHECK(!is_zerodivisor(P(R, "x+y"), Mxy));
  CHECK(!is_zerodivisor(P(R, "x"), ModulePresentation::free_module(R, 0)));
}

TEST_CASE("regular sequence failure index") {
  auto R = fp_ring(32003, {"x", "y"});
  auto S1 = ModulePresentation::free_module(R, 1);
  auto Mxy = ModulePresentation::cyclic(ID(R, {"x*y"}));

  CHECK(regular_sequence_fail_index(PV(R, {"x", "y"}), S1) == 0);
  CHECK(regular_sequence_fail_index(PV(R, {"x", "x"}), S1) == 2);
  CHECK(regular_sequence_fail_index(PV(R, {"x"}), Mxy) == 1);
  CHECK(regular_sequence_fail_index(PV(R, {"x+y"}), Mxy) == 0);
  CHECK(regular_sequence_fail_index({}, S1) == 0);
  CHECK(regular_sequence_fail_index(
            PV(R, {"x"}), ModulePresentation::free_module(R, 0)) == 0);
}

TEST_CASE("prime avoidance ladder") {
  auto R = fp_ring(32003, {"x", "y"});
  Ideal I = ID(R, {"x", "y"});
  Rng rng(42, "avoid-test");

  CHECK(S(R, avoid_primes(I, {ID(R, {"x"})}, rng)) == "y");
  CHECK(S(R, avoid_primes(I, {ID(R, {"x"}), ID(R, {"y"})}, rng)) == "x + y");

  std::vector<Ideal> three = {ID(R, {"x"}), ID(R, {"y"}), ID(R, {"x+y"})};
  Poly a = avoid_primes(I, three, rng);
  CHECK(I.contains(a));
  for (const auto& p : three) CHECK(!p.contains(a));
  Rng rng2(42, "avoid-test");
  avoid_primes(I, {ID(R, {"x"})}, rng2);
  avoid_primes(I, {ID(R, {"x"}), ID(R, {"y"})}, rng2);
  CHECK(poly_eq(*R, a, avoid_primes(I, three, rng2)));

  // Over F_3 every linear combination from the maximal ideal lies on one of
  // its four lines, so the ladder has to reach for a higher-degree avoider
  // such as x^2 + y.
  auto R3 = fp_ring(3, {"x", "y"});
  std::vector<Ideal> lines = {ID(R3, {"x"}), ID(R3, {"y"}), ID(R3, {"x+y"}),
                              ID(R3, {"x-y"})};
  Rng rng3(7, "small");
  Ideal m3 = ID(R3, {"x", "y"});
  Poly avoider = avoid_primes(m3, lines, rng3);
  CHECK(m3.contains(avoider));
  for (const auto& p : lines) CHECK(!p.contains(avoider));
}

TEST_CASE("support ideal of M/IM") {
  auto R = fp_ring(32003, {"x", "y"});
  auto S1 = ModulePresentation::free_module(R, 1);
  CHECK(ideal_key(ideal_IM(ID(R, {"x"}), S1)) == "x");
  CHECK(ideal_key(ideal_IM(ID(R, {"x"}),
                           ModulePresentation::cyclic(ID(R, {"x^2"})))) ==
        "x");
  CHECK(ideal_IM(ID(R, {"1"}), S1).is_unit());
}

TEST_CASE("generalized depth: frozen values and witnesses") {
  auto R = fp_ring(32003, {"x", "y"});
  auto S1 = ModulePresentation::free_module(R, 1);
  Ideal m = ID(R, {"x", "y"});

  auto d = depth_k(m, S1, -1, 42);
  CHECK(d.depth == ExtInt(2));
  CHECK(SV(R, d.witness) == std::vector<std::string>{"x", "y"});

  auto M1 = ModulePresentation::cyclic(ID(R, {"x^2", "x*y"}));
  CHECK(depth_k(m, M1, -1, 42).depth == ExtInt(0));
  CHECK(depth_k(m, M1, 0, 42).depth == ExtInt::infinity());

  auto Mxy = ModulePresentation::cyclic(ID(R, {"x*y"}));
  auto d2 = depth_k(ID(R, {"x+y"}), Mxy, -1, 42);
  CHECK(d2.depth == ExtInt(1));
  CHECK(SV(R, d2.witness) == std::vector<std::string>{"x + y"});
  CHECK(depth_k(ID(R, {"x"}), Mxy, 0, 42).depth == ExtInt(0));
  CHECK(depth_k(m, Mxy, 0, 42).depth == ExtInt::infinity());
  CHECK(depth_k(m, S1, 1, 42).depth == ExtInt::infinity());

  auto R3 = fp_ring(32003, {"x", "y", "z"});
  auto d3 =
      depth_k(ID(R3, {"x", "y", "z"}),
              ModulePresentation::free_module(R3, 1), -1, 42);
  CHECK(d3.depth == ExtInt(3));
  CHECK(SV(R3, d3.witness) == std::vector<std::string>{"x", "y", "z"});
}

TEST_CASE("depth witnesses vary by seed but the value does not") {
  auto R = fp_ring(32003, {"x", "y"});
  Ideal m = ID(R, {"x", "y"});
  // Three associated lines force the avoider past the deterministic rungs.
  auto N = ModulePresentation::cyclic(ID(R, {"x^2*y + x*y^2"}));
  auto a = depth_k(m, N, -1, 42);
  auto b = depth_k(m, N, -1, 4242);
  CHECK(a.depth == ExtInt(1));
  CHECK(b.depth == ExtInt(1));
  REQUIRE(a.witness.size() == 1);
  REQUIRE(b.witness.size() == 1);
  CHECK(regular_sequence_fail_index(a.witness, N) == 0);
  CHECK(regular_sequence_fail_index(b.witness, N) == 0);
  CHECK(m.contains(a.witness[0]));
  CHECK(m.contains(b.witness[0]));

  auto a2 = depth_k(m, N, -1, 42);
  CHECK(SV(R, a.witness) == SV(R, a2.witness));
}

TEST_CASE("greedy depth agrees with the Ext characterization") {
  auto R = fp_ring(32003, {"x", "y"});
  auto S1 = ModulePresentation::free_module(R, 1);
  auto Mxy = ModulePresentation::cyclic(ID(R, {"x*y"}));
  auto M1 = ModulePresentation::cyclic(ID(R, {"x^2", "x*y"}));
  Ideal m = ID(R, {"x", "y"});

  struct Case {
    Ideal I;
    const ModulePresentation* N;
    long k;
  };
  std::vector<Case> cases = {
      {m, &S1, -1},          {m, &M1, -1},         {m, &M1, 0},
      {ID(R, {"x+y"}), &Mxy, -1}, {ID(R, {"x"}), &Mxy, 0},
      {m, &Mxy, 0},          {m, &Mxy, -1},        {m, &S1, 1},
  };
  for (const auto& c : cases) {
    CHECK(depth_k(c.I, *c.N, c.k, 42).depth ==
          depth_k_ext_oracle(c.I, *c.N, c.k));
  }

  auto R3 = fp_ring(32003, {"x", "y", "z"});
  auto F3 = ModulePresentation::free_module(R3, 1);
  auto Mxy3 = ModulePresentation::cyclic(ID(R3, {"x*y"}));
  Ideal m3 = ID(R3, {"x", "y", "z"});
  CHECK(depth_k(m3, Mxy3, -1, 42).depth == ExtInt(2));
  CHECK(depth_k_ext_oracle(m3, Mxy3, -1) == ExtInt(2));
  CHECK(depth_k(m3, F3, 0, 42).depth == depth_k_ext_oracle(m3, F3, 0));
}

TEST_CASE("avoidance refuses when the ideal sits inside a prime") {
  auto R = fp_ring(32003, {"x", "y"});
  Rng rng(42, "avoid-contained");
  try {
    avoid_primes(ID(R, {"x"}), {ID(R, {"x"})}, rng);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_avoider);
  }
  try {
    avoid_primes(ID(R, {"x*y"}), {ID(R, {"y"}), ID(R, {"x"})}, rng);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_avoider);
  }
}

TEST_CASE("depth rejects ideals that are locally improper") {
  auto R = fp_ring(32003, {"x", "y"});
  auto S1 = ModulePresentation::free_module(R, 1);
  for (const auto& gens :
       std::vector<std::vector<std::string>>{{"x - 1"}, {"x", "y - 2"}}) {
    try {
      depth_k(ID(R, gens), S1, -1, 42);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::not_local);
    }
  }
}

TEST_CASE("dimension-filtered sequence test") {
  auto R = fp_ring(32003, {"x", "y"});
  auto S1 = ModulePresentation::free_module(R, 1);
  auto M1 = ModulePresentation::cyclic(ID(R, {"x^2", "x*y"}));

  CHECK(dim_sequence_fail_index(PV(R, {"x", "y"}), S1, -1, 42) == 0);
  CHECK(dim_sequence_fail_index(PV(R, {"x", "x"}), S1, -1, 42) == 2);
  // Ass(M1) has dimensions 1 and 0, so the cutoff k = 1 leaves nothing to
  // avoid and any element passes vacuously.
  CHECK(dim_sequence_fail_index(PV(R, {"x"}), M1, 1, 42) == 0);
  CHECK(dim_sequence_fail_index(PV(R, {"x"}), M1, 0, 42) == 1);
  CHECK(dim_sequence_fail_index(PV(R, {"y"}), M1, 0, 42) == 0);
  try {
    dim_sequence_fail_index(PV(R, {"x + 1"}), S1, -1, 42);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_local);
  }
}
