// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#include "theorems.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace lch;
using namespace lch::testutil;

namespace {

std::vector<std::string> keys_of(const AssSet& s) {
  std::vector<std::string> out;
  for (const auto& p : s.items()) out.push_back(ideal_key(p.ideal));
  return out;
}

}  // namespace

TEST_CASE("formula examples on small quotients") {
  auto R = fp_ring(32003, {"x", "y"});
  auto F1 = ModulePresentation::free_module(R, 1);

  auto a = ass_lch_formula(ID(R, {"x"}), F1, F1, -1, 1, 42);
  CHECK(a.depth_value == ExtInt(1));
  CHECK(a.guaranteed);
  REQUIRE(a.sets_by_j.size() == 2);
  CHECK(a.sets_by_j[0].empty());
  CHECK(keys_of(a.sets_by_j[1]) == std::vector<std::string>{"x"});
  CHECK(keys_of(a.union_set) == std::vector<std::string>{"x"});

  auto b = ass_lch_formula(ID(R, {"x", "y"}), F1, F1, -1, 2, 42);
  CHECK(b.depth_value == ExtInt(2));
  CHECK(b.sets_by_j[0].empty());
  CHECK(b.sets_by_j[1].empty());
  CHECK(keys_of(b.union_set) == std::vector<std::string>{"x,y"});
  CHECK(SV(R, b.witness) == std::vector<std::string>{"x", "y"});

  auto N = ModulePresentation::cyclic(ID(R, {"x^2", "x*y"}));
  auto c = ass_lch_formula(ID(R, {"x"}), F1, N, 0, 0, 42);
  CHECK(c.depth_value == ExtInt(0));
  CHECK(keys_of(c.union_set) == std::vector<std::string>{"x", "x,y"});
}

TEST_CASE("formula rejects unions beyond the depth") {
  auto R = fp_ring(32003, {"x", "y"});
  auto F1 = ModulePresentation::free_module(R, 1);
  try {
    ass_lch_formula(ID(R, {"x"}), F1, F1, -1, 2, 42);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::exceeds_depth);
  }
}

TEST_CASE("formula in the infinite-depth regime is flagged") {
  auto R = fp_ring(32003, {"x", "y"});
  auto F1 = ModulePresentation::free_module(R, 1);

  // dim(S/(x,y)) = 0 <= k, so the filtered depth is infinite; the quotient
  // side is still computed but marked as uncertified.
  auto a = ass_lch_formula(ID(R, {"x", "y"}), F1, F1, 0, 2, 42);
  CHECK(!a.depth_value.is_finite());
  CHECK(!a.guaranteed);
  REQUIRE(a.witness.size() == 2);
  CHECK(a.sets_by_j[0].empty());
  CHECK(a.sets_by_j[1].empty());
  CHECK(keys_of(a.union_set) == std::vector<std::string>{"x,y"});

  // Locally trivial coefficient module: everything vanishes.
  auto M = ModulePresentation::cyclic(ID(R, {"x - 1"}));
  auto b = ass_lch_formula(ID(R, {"x"}), M, F1, -1, 3, 42);
  CHECK(!b.depth_value.is_finite());
  CHECK(b.guaranteed);
  CHECK(b.union_set.empty());
  CHECK(b.sets_by_j.size() == 4);
}

TEST_CASE("top-degree set examples") {
  auto R = fp_ring(32003, {"x", "y"});
  auto F1 = ModulePresentation::free_module(R, 1);

  CHECK(keys_of(ass_top_lch(ID(R, {"x", "y"}), F1, F1, 42)) ==
        std::vector<std::string>{"x,y"});

  auto Mx = ModulePresentation::cyclic(ID(R, {"x"}));
  CHECK(keys_of(ass_top_lch(ID(R, {"y"}), Mx, F1, 42)) ==
        std::vector<std::string>{"x,y"});

  // Depth zero: the Hom stage already contributes.
  CHECK(keys_of(ass_top_lch(ID(R, {"x"}), F1, Mx, 42)) ==
        std::vector<std::string>{"x"});

  auto M1 = ModulePresentation::cyclic(ID(R, {"x - 1"}));
  try {
    ass_top_lch(ID(R, {"x"}), M1, F1, 42);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_top);
  }
}

TEST_CASE("ext oracle set examples") {
  auto R = fp_ring(32003, {"x", "y"});
  auto F1 = ModulePresentation::free_module(R, 1);

  CHECK(keys_of(ext_ass_sets(ID(R, {"x"}), F1, -1, 1, 1, 42)) ==
        std::vector<std::string>{"x"});
  CHECK(keys_of(ext_ass_sets(ID(R, {"x"}), F1, -1, 1, 2, 42)) ==
        std::vector<std::string>{"x"});
  CHECK(keys_of(ext_ass_sets_powers(ID(R, {"x", "y"}), {2, 1}, F1, -1, 2,
                                    42)) == std::vector<std::string>{"x,y"});

  try {
    ext_ass_sets(ID(R, {"x"}), F1, -1, 2, 1, 42);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::exceeds_depth);
  }
  try {
    ext_ass_sets_powers(ID(R, {"x", "y"}), {2}, F1, -1, 1, 42);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::malformed_input);
  }
}

TEST_CASE("quotient formula matches the ext oracle") {
  auto R = fp_ring(32003, {"x", "y"});
  auto F1 = ModulePresentation::free_module(R, 1);
  auto Nxy = ModulePresentation::cyclic(ID(R, {"x*y"}));
  auto Nemb = ModulePresentation::cyclic(ID(R, {"x^2", "x*y"}));
  auto R3 = fp_ring(32003, {"x", "y", "z"});
  auto F3 = ModulePresentation::free_module(R3, 1);
  auto Nxy3 = ModulePresentation::cyclic(ID(R3, {"x*y"}));

  struct Case {
    Ideal I;
    const ModulePresentation* free1;
    const ModulePresentation* N;
    long k, l;
    std::vector<std::string> expect;
  };
  std::vector<Case> cases = {
      {ID(R, {"x"}), &F1, &F1, -1, 1, {"x"}},
      {ID(R, {"x", "y"}), &F1, &F1, -1, 2, {"x,y"}},
      {ID(R, {"x"}), &F1, &Nxy, -1, 0, {"x"}},
      {ID(R, {"y"}), &F1, &Nemb, -1, 0, {"x,y"}},
      {ID(R, {"x"}), &F1, &Nemb, 0, 0, {"x", "x,y"}},
      {ID(R3, {"x", "y"}), &F3, &Nxy3, -1, 1, {"x,y"}},
  };
  for (const auto& c : cases) {
    auto res = ass_lch_formula(c.I, *c.free1, *c.N, c.k, c.l, 42);
    CHECK(keys_of(res.union_set) == c.expect);
    for (long t = 1; t <= 3; ++t) {
      auto o = ext_ass_sets(c.I, *c.N, c.k, c.l, t, 42);
      CHECK(o.set_equals(res.union_set));
    }
    size_t s = c.I.gens().size();
    for (size_t bits = 0; bits < (size_t(1) << s); ++bits) {
      std::vector<long> ts;
      for (size_t i = 0; i < s; ++i) ts.push_back((bits >> i) & 1 ? 2 : 1);
      auto o = ext_ass_sets_powers(c.I, ts, *c.N, c.k, c.l, 42);
      CHECK(o.set_equals(res.union_set));
    }
  }
}

TEST_CASE("witness choice does not move the union") {
  auto R = fp_ring(32003, {"x", "y"});
  auto F1 = ModulePresentation::free_module(R, 1);
  auto Nemb = ModulePresentation::cyclic(ID(R, {"x^2", "x*y"}));

  struct Case {
    Ideal I;
    const ModulePresentation* N;
    long k, l;
  };
  std::vector<Case> cases = {
      {ID(R, {"x", "y"}), &F1, -1, 2},
      {ID(R, {"x"}), &F1, -1, 1},
      {ID(R, {"x"}), &Nemb, 0, 0},
      {ID(R, {"x", "y"}), &F1, 0, 2},
  };
  for (const auto& c : cases) {
    auto a = ass_lch_formula(c.I, F1, *c.N, c.k, c.l, 42);
    auto b = ass_lch_formula(c.I, F1, *c.N, c.k, c.l, 4242);
    CHECK(a.union_set.set_equals(b.union_set));
    CHECK(keys_of(a.union_set) == keys_of(b.union_set));
  }
}

TEST_CASE("unions grow with l and shrink with k") {
  auto R = fp_ring(32003, {"x", "y"});
  auto F1 = ModulePresentation::free_module(R, 1);

  auto l0 = ass_lch_formula(ID(R, {"x", "y"}), F1, F1, -1, 0, 42);
  auto l1 = ass_lch_formula(ID(R, {"x", "y"}), F1, F1, -1, 1, 42);
  auto l2 = ass_lch_formula(ID(R, {"x", "y"}), F1, F1, -1, 2, 42);
  CHECK(l0.union_set.subset_of(l1.union_set));
  CHECK(l1.union_set.subset_of(l2.union_set));

  auto km1 = ass_lch_formula(ID(R, {"x"}), F1, F1, -1, 1, 42);
  auto k0 = ass_lch_formula(ID(R, {"x"}), F1, F1, 0, 1, 42);
  auto k1 = ass_lch_formula(ID(R, {"x"}), F1, F1, 1, 1, 42);
  CHECK(k0.union_set.subset_of(km1.union_set));
  CHECK(k1.union_set.subset_of(k0.union_set));
  CHECK(km1.guaranteed);
  CHECK(k0.guaranteed);
  CHECK(!k1.guaranteed);
  CHECK(keys_of(k1.union_set) == std::vector<std::string>{"x"});
}

TEST_CASE("full-depth union degenerates to the top set") {
  auto R = fp_ring(32003, {"x", "y"});
  auto F1 = ModulePresentation::free_module(R, 1);
  auto Nemb = ModulePresentation::cyclic(ID(R, {"x^2", "x*y"}));

  auto a = ass_lch_formula(ID(R, {"x", "y"}), F1, F1, -1, 2, 42);
  CHECK(a.union_set.set_equals(ass_top_lch(ID(R, {"x", "y"}), F1, F1, 42)));
  for (long j = 0; j < 2; ++j) CHECK(a.sets_by_j[size_t(j)].empty());

  auto b = ass_lch_formula(ID(R, {"x"}), F1, F1, -1, 1, 42);
  CHECK(b.union_set.set_equals(ass_top_lch(ID(R, {"x"}), F1, F1, 42)));

  auto c = ass_lch_formula(ID(R, {"y"}), F1, Nemb, -1, 0, 42);
  CHECK(c.union_set.set_equals(ass_top_lch(ID(R, {"y"}), F1, Nemb, 42)));
}

TEST_CASE("top set agrees with ext modules of the cyclic quotient") {
  auto R = fp_ring(32003, {"x", "y"});
  auto F1 = ModulePresentation::free_module(R, 1);
  auto Nemb = ModulePresentation::cyclic(ID(R, {"x^2", "x*y"}));

  struct Case {
    Ideal I;
    const ModulePresentation* N;
    long r;
  };
  std::vector<Case> cases = {
      {ID(R, {"x"}), &F1, 1},
      {ID(R, {"x", "y"}), &F1, 2},
      {ID(R, {"y"}), &Nemb, 0},
  };
  for (const auto& c : cases) {
    auto M = ModulePresentation::cyclic(c.I);
    auto top = ass_top_lch(c.I, M, *c.N, 42);
    auto viaext = ass_ext_filtered(M, *c.N, c.r, -1, 42);
    CHECK(top.set_equals(viaext));
  }
}

TEST_CASE("power invariance of the quotient unions") {
  auto R = fp_ring(32003, {"x", "y"});
  auto F1 = ModulePresentation::free_module(R, 1);

  auto a = power_invariance_check(PV(R, {"x"}), F1, -1, {3}, 42);
  CHECK(a.equal);
  CHECK(keys_of(a.base_union) == std::vector<std::string>{"", "x"});
  CHECK(keys_of(a.powered_union) == std::vector<std::string>{"", "x"});
  CHECK(!a.max_variant);

  auto b = power_invariance_check(PV(R, {"x", "y"}), F1, -1, {2, 2}, 42);
  CHECK(b.equal);
  CHECK(keys_of(b.base_union) ==
        std::vector<std::string>{"", "x", "x,y"});

  auto c = power_invariance_check({}, F1, -1, {}, 42);
  CHECK(c.equal);
  CHECK(keys_of(c.base_union) == std::vector<std::string>{""});

  auto d = power_invariance_check(PV(R, {"x"}), F1, 1, {2}, 42);
  CHECK(d.equal);
  CHECK(d.max_variant);
  CHECK(d.equal_with_max);
  CHECK(keys_of(d.base_with_max) ==
        std::vector<std::string>{"", "x", "x,y"});

  try {
    power_invariance_check(PV(R, {"x", "x"}), F1, -1, {1, 1}, 42);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_sequence);
  }
}

TEST_CASE("permutable prefix bound") {
  auto R = fp_ring(32003, {"x", "y"});
  auto F1 = ModulePresentation::free_module(R, 1);
  auto Nemb = ModulePresentation::cyclic(ID(R, {"x^2", "x*y"}));

  auto a = bn_star_set(PV(R, {"x"}), F1, ID(R, {"x"}), 0, 1, 42);
  CHECK(keys_of(a.star) == std::vector<std::string>{"x"});
  CHECK(keys_of(a.ext_union) == std::vector<std::string>{"x"});
  CHECK(a.contained);

  // j = 0 collapses the bound to Ass(N) filtered at k.
  auto b = bn_star_set({}, Nemb, ID(R, {"x"}), 0, 0, 42);
  CHECK(keys_of(b.star) == std::vector<std::string>{"x", "x,y"});
  CHECK(b.contained);

  auto c = bn_star_set(PV(R, {"y"}), Nemb, ID(R, {"y"}), 0, 1, 42);
  CHECK(keys_of(c.star) == std::vector<std::string>{"x,y"});
  CHECK(c.contained);

  try {
    bn_star_set(PV(R, {"x", "x", "x", "x", "x"}), F1, ID(R, {"x"}), -1, 5, 42);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::too_many_permutations);
  }
  try {
    bn_star_set(PV(R, {"y"}), F1, ID(R, {"x"}), -1, 1, 42);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_in_ideal);
  }
  try {
    bn_star_set(PV(R, {"x"}), Nemb, ID(R, {"x"}), -1, 1, 42);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_sequence);
  }
}

TEST_CASE("repeat runs are identical") {
  auto R = fp_ring(32003, {"x", "y"});
  auto F1 = ModulePresentation::free_module(R, 1);
  auto Nemb = ModulePresentation::cyclic(ID(R, {"x^2", "x*y"}));

  auto a1 = ass_lch_formula(ID(R, {"x", "y"}), F1, Nemb, -1, 0, 42);
  auto a2 = ass_lch_formula(ID(R, {"x", "y"}), F1, Nemb, -1, 0, 42);
  CHECK(keys_of(a1.union_set) == keys_of(a2.union_set));
  CHECK(SV(R, a1.witness) == SV(R, a2.witness));

  auto b1 = bn_star_set(PV(R, {"y"}), Nemb, ID(R, {"y"}), 0, 1, 42);
  auto b2 = bn_star_set(PV(R, {"y"}), Nemb, ID(R, {"y"}), 0, 1, 42);
  CHECK(keys_of(b1.star) == keys_of(b2.star));
  CHECK(keys_of(b1.ext_union) == keys_of(b2.ext_union));
}
