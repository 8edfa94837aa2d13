// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#include "theorems.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "error.hpp"

namespace lch {

namespace {

// Proper in the local sense: no basis element with a unit constant term.
bool inside_m(const Ideal& a) {
  const Ring& R = *a.ring();
  for (const auto& g : a.gb())
    if (!R.field().is_zero(poly_constant_term(R, g))) return false;
  return true;
}

// Greedy witness of the requested length; used when the filtered depth is
// infinite, where every step has an avoider because no associated prime of
// dimension above k contains the ideal.
std::vector<Poly> greedy_witness(const Ideal& a, const ModulePresentation& N,
                                 long k, long len, uint64_t seed) {
  Rng rng(seed ^ fnv1a64(ideal_key(a)), "formula-witness");
  ModulePresentation M = N;
  std::vector<Poly> xs;
  while (long(xs.size()) < len) {
    std::vector<Ideal> bad;
    AssSet ass = associated_primes(M, seed);
    for (const auto& p : ass.items())
      if (p.dim > k) bad.push_back(p.ideal);
    Poly x = avoid_primes(a, bad, rng);
    xs.push_back(x);
    M = M.quotient_by(x);
  }
  return xs;
}

AssSet keep_over(const AssSet& s, long k, const Ideal& a) {
  AssSet out;
  for (const auto& p : s.items())
    if (p.dim >= k && p.ideal.contains_ideal(a)) out.insert(p);
  return out;
}

PrimeIdeal maximal_prime(const RingPtr& R) {
  std::vector<Poly> vars;
  for (int i = 0; i < R->nvars(); ++i) vars.push_back(poly_var(*R, i));
  return {Ideal(R, vars), 0, true};
}

}  // namespace

TheoremSetResult ass_lch_formula(const Ideal& I, const ModulePresentation& M,
                                 const ModulePresentation& N, long k, long l,
                                 uint64_t seed) {
  require_same_ring(I.ring(), M.ring(), "ass_lch_formula");
  require_same_ring(I.ring(), N.ring(), "ass_lch_formula");
  if (k < -1) fail(Errc::malformed_input, "dimension cutoff must be >= -1");
  if (l < 0) fail(Errc::malformed_input, "union bound must be >= 0");

  TheoremSetResult res;
  res.k = k;
  res.l = l;
  Ideal a = ideal_IM(I, M);
  if (!inside_m(a)) {
    // IM = M locally, so every cohomology module vanishes and both sides of
    // the identity are empty.
    res.depth_value = ExtInt::infinity();
    res.guaranteed = true;
    res.sets_by_j.assign(size_t(l) + 1, AssSet{});
    return res;
  }

  DepthResult dr = depth_k(a, N, k, seed);
  res.depth_value = dr.depth;
  if (dr.depth.is_finite()) {
    if (ExtInt(l) > dr.depth)
      fail(Errc::exceeds_depth,
           "the formula covers only unions up to the filtered depth " +
               dr.depth.str());
    res.guaranteed = true;
    res.witness.assign(dr.witness.begin(), dr.witness.begin() + l);
  } else {
    res.guaranteed = false;
    res.witness = greedy_witness(a, N, k, l, seed);
  }

  ModulePresentation cur = N;
  for (long j = 0; j <= l; ++j) {
    if (j > 0) cur = cur.quotient_by(res.witness[size_t(j) - 1]);
    AssSet keep = keep_over(associated_primes(cur, seed), k, a);
    res.union_set = AssSet::union_of(res.union_set, keep);
    res.sets_by_j.push_back(keep);
  }
  return res;
}

AssSet ass_top_lch(const Ideal& I, const ModulePresentation& M,
                   const ModulePresentation& N, uint64_t seed) {
  require_same_ring(I.ring(), M.ring(), "ass_top_lch");
  require_same_ring(I.ring(), N.ring(), "ass_top_lch");
  Ideal a = ideal_IM(I, M);
  if (!inside_m(a))
    fail(Errc::no_top, "every cohomology module vanishes here");
  DepthResult dr = depth_k(a, N, -1, seed);
  if (!dr.depth.is_finite())
    fail(Errc::no_top, "infinite depth: no first nonvanishing module");
  ModulePresentation cur = N;
  for (const auto& x : dr.witness) cur = cur.quotient_by(x);
  AssSet out;
  AssSet ass = associated_primes(cur, seed);
  for (const auto& p : ass.items())
    if (p.ideal.contains_ideal(a)) out.insert(p);
  return out;
}

AssSet ass_ext_filtered(const ModulePresentation& M,
                        const ModulePresentation& N, long j, long k,
                        uint64_t seed) {
  require_same_ring(M.ring(), N.ring(), "ass_ext_filtered");
  if (j < 0) fail(Errc::malformed_input, "cohomological index must be >= 0");
  return filter_dim_ge(associated_primes(ext_module(int(j), M, N), seed), k);
}

AssSet ext_ass_sets(const Ideal& I, const ModulePresentation& N, long k,
                    long l, long t, uint64_t seed) {
  require_same_ring(I.ring(), N.ring(), "ext_ass_sets");
  if (t < 1) fail(Errc::malformed_input, "power must be positive");
  if (l < 0) fail(Errc::malformed_input, "union bound must be >= 0");
  DepthResult dr = depth_k(I, N, k, seed);
  if (dr.depth.is_finite() && ExtInt(l) > dr.depth)
    fail(Errc::exceeds_depth,
         "the oracle identity covers only unions up to the filtered depth " +
             dr.depth.str());
  auto M = ModulePresentation::cyclic(ideal_power(I, t));
  AssSet out;
  for (long j = 0; j <= l; ++j)
    out = AssSet::union_of(out, ass_ext_filtered(M, N, j, k, seed));
  return out;
}

AssSet ext_ass_sets_powers(const Ideal& I, const std::vector<long>& ts,
                           const ModulePresentation& N, long k, long l,
                           uint64_t seed) {
  require_same_ring(I.ring(), N.ring(), "ext_ass_sets_powers");
  if (ts.size() != I.gens().size())
    fail(Errc::malformed_input, "one exponent per generator expected");
  for (long t : ts)
    if (t < 1) fail(Errc::malformed_input, "powers must be positive");
  if (l < 0) fail(Errc::malformed_input, "union bound must be >= 0");
  DepthResult dr = depth_k(I, N, k, seed);
  if (dr.depth.is_finite() && ExtInt(l) > dr.depth)
    fail(Errc::exceeds_depth,
         "the oracle identity covers only unions up to the filtered depth " +
             dr.depth.str());
  auto M = ModulePresentation::cyclic(ideal_generator_powers(I, ts));
  AssSet out;
  for (long j = 0; j <= l; ++j)
    out = AssSet::union_of(out, ass_ext_filtered(M, N, j, k, seed));
  return out;
}

PowerInvarianceReport power_invariance_check(const std::vector<Poly>& xs,
                                             const ModulePresentation& N,
                                             long k,
                                             const std::vector<long>& exps,
                                             uint64_t seed) {
  const RingPtr& R = N.ring();
  if (exps.size() != xs.size())
    fail(Errc::malformed_input, "one exponent per sequence element expected");
  for (long e : exps)
    if (e < 1) fail(Errc::malformed_input, "exponents must be positive");
  long bad = dim_sequence_fail_index(xs, N, k, seed);
  if (bad)
    fail(Errc::not_a_sequence,
         "element " + std::to_string(bad) +
             " lies in an associated prime of dimension above the cutoff");

  std::vector<Poly> ys;
  for (size_t i = 0; i < xs.size(); ++i)
    ys.push_back(poly_pow(*R, xs[i], exps[i]));

  PowerInvarianceReport rep;
  AssSet base_all, powered_all;  // unfiltered unions for the k = 1 variant
  ModulePresentation base = N, powered = N;
  for (size_t j = 0; j <= xs.size(); ++j) {
    if (j > 0) {
      base = base.quotient_by(xs[j - 1]);
      powered = powered.quotient_by(ys[j - 1]);
    }
    AssSet b = associated_primes(base, seed);
    AssSet p = associated_primes(powered, seed);
    base_all = AssSet::union_of(base_all, b);
    powered_all = AssSet::union_of(powered_all, p);
    rep.base_union = AssSet::union_of(rep.base_union, filter_dim_ge(b, k));
    rep.powered_union =
        AssSet::union_of(rep.powered_union, filter_dim_ge(p, k));
  }
  rep.equal = rep.base_union.set_equals(rep.powered_union);

  if (k == 1) {
    rep.max_variant = true;
    PrimeIdeal m = maximal_prime(R);
    base_all.insert(m);
    powered_all.insert(m);
    rep.base_with_max = base_all;
    rep.powered_with_max = powered_all;
    rep.equal_with_max = rep.base_with_max.set_equals(rep.powered_with_max);
  }
  return rep;
}

BnStarResult bn_star_set(const std::vector<Poly>& xs,
                         const ModulePresentation& N, const Ideal& I, long k,
                         long j, uint64_t seed) {
  require_same_ring(I.ring(), N.ring(), "bn_star_set");
  if (j < 0 || size_t(j) > xs.size())
    fail(Errc::malformed_input, "prefix length out of range");
  if (j > 4)
    fail(Errc::too_many_permutations,
         "permutability is verified by brute force; prefixes up to 4 only");
  for (long i = 0; i < j; ++i)
    if (!I.contains(xs[size_t(i)]))
      fail(Errc::not_in_ideal,
           "sequence element " + std::to_string(i + 1) + " is outside I");

  // Ass of N quotiented by the subset of prefix elements encoded in mask;
  // the quotient only depends on the subset, not on the order.
  std::map<uint32_t, AssSet> cache;
  auto ass_of = [&](uint32_t mask) -> const AssSet& {
    auto it = cache.find(mask);
    if (it != cache.end()) return it->second;
    ModulePresentation M = N;
    for (long i = 0; i < j; ++i)
      if (mask & (1u << i)) M = M.quotient_by(xs[size_t(i)]);
    return cache.emplace(mask, associated_primes(M, seed)).first->second;
  };

  auto perm = std::vector<int>(size_t(j));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    uint32_t mask = 0;
    for (int idx : perm) {
      for (const auto& p : ass_of(mask).items()) {
        bool guarded = p.dim > k || !p.ideal.contains_ideal(I);
        if (guarded && p.ideal.contains(xs[size_t(idx)]))
          fail(Errc::not_a_sequence,
               "prefix is not permutable: element " + std::to_string(idx + 1) +
                   " hits a guarded associated prime");
      }
      mask |= 1u << idx;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  BnStarResult res;
  uint32_t full = j == 0 ? 0u : (1u << j) - 1u;
  res.star = filter_dim_ge(ass_of(full), k + 1);
  for (long i = 0; i <= j; ++i) {
    uint32_t mask = i == 0 ? 0u : (1u << i) - 1u;
    for (const auto& p : ass_of(mask).items())
      if (p.dim == k) res.star.insert(p);
  }
  for (long t = 1; t <= 3; ++t) {
    auto M = ModulePresentation::cyclic(ideal_power(I, t));
    res.ext_union = AssSet::union_of(res.ext_union,
                                     ass_ext_filtered(M, N, j, k, seed));
  }
  res.contained = res.ext_union.subset_of(res.star);
  return res;
}

}  // namespace lch
