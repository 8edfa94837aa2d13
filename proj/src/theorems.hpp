// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "dimdepth.hpp"

namespace lch {

// Output of the quotient-side formula for the associated primes of the
// generalized local cohomology modules H^j_I(M,N) with j <= l, filtered at
// dimension >= k.  sets_by_j[j] = Ass(N/(x_1..x_j)N)_{>=k} ∩ V(I_M) for the
// witness sequence x_1..x_l; union_set is their union, which equals
// ⋃_{j<=l} Ass(H^j_I(M,N))_{>=k} whenever the filtered depth r is finite.
struct TheoremSetResult {
  long k = -1;
  long l = 0;
  ExtInt depth_value;  // r = depth_k(I_M, N)
  // True when the union provably matches the cohomology side (finite r, or
  // trivially when I_M is locally a unit so every H^j vanishes).  With
  // infinite r the quotient side is still computed but not certified.
  bool guaranteed = true;
  std::vector<Poly> witness;      // x_1..x_l
  std::vector<AssSet> sets_by_j;  // indexed by j = 0..l
  AssSet union_set;
};

// The formula above.  Requires l <= r when r is finite (exceeds-depth
// otherwise); any finite l is accepted when r is infinite, with the
// guaranteed flag cleared.
TheoremSetResult ass_lch_formula(const Ideal& I, const ModulePresentation& M,
                                 const ModulePresentation& N, long k, long l,
                                 uint64_t seed);

// Associated primes of the first nonvanishing module H^r_I(M,N), where
// r = depth(I_M, N): the unfiltered set Ass(N/(x_1..x_r)N) ∩ V(I_M) for a
// maximal regular witness.  Raises no-top when r is infinite.
AssSet ass_top_lch(const Ideal& I, const ModulePresentation& M,
                   const ModulePresentation& N, uint64_t seed);

// Ass(Ext^j(M, N)) cut at dimension >= k.
AssSet ass_ext_filtered(const ModulePresentation& M,
                        const ModulePresentation& N, long j, long k,
                        uint64_t seed);

// Independent Ext oracle: ⋃_{j<=l} Ass(Ext^j(S/I^t, N))_{>=k}.  Requires
// l <= depth_k(I, N) when that depth is finite.
AssSet ext_ass_sets(const Ideal& I, const ModulePresentation& N, long k,
                    long l, long t, uint64_t seed);

// Same union with the cyclic module S/(a_1^{t_1},..,a_s^{t_s}) built from
// per-generator powers of I's generator list (ts matches I.gens()).
AssSet ext_ass_sets_powers(const Ideal& I, const std::vector<long>& ts,
                           const ModulePresentation& N, long k, long l,
                           uint64_t seed);

// Both sides of the power-invariance identity for an N-sequence x_1..x_r in
// dimension >k: ⋃_{j<=r} Ass(N/(x_1^{n_1}..x_j^{n_j})N)_{>=k} against the
// same union with all exponents 1.  At k = 1 the unfiltered variant with the
// maximal ideal adjoined on both sides is reported as well.
struct PowerInvarianceReport {
  AssSet base_union;
  AssSet powered_union;
  bool equal = false;
  bool max_variant = false;  // set when k == 1
  AssSet base_with_max;
  AssSet powered_with_max;
  bool equal_with_max = false;
};

PowerInvarianceReport power_invariance_check(const std::vector<Poly>& xs,
                                             const ModulePresentation& N,
                                             long k,
                                             const std::vector<long>& exps,
                                             uint64_t seed);

// The containment bound for a permutable sequence: star is
// Ass(N/(x_1..x_j)N)_{>=k+1} ∪ ⋃_{i<=j} Ass(N/(x_1..x_i)N)_{=k}, and
// ext_union is ⋃_{t in 1..3} Ass(Ext^j(S/I^t, N))_{>=k}; contained reports
// ext_union ⊆ star.  Permutability (every ordering of the first j elements
// is an N-sequence in dimension >k and avoids the associated primes not
// containing I) is verified by brute force, so j <= 4 is required.
struct BnStarResult {
  AssSet star;
  AssSet ext_union;
  bool contained = false;
};

BnStarResult bn_star_set(const std::vector<Poly>& xs,
                         const ModulePresentation& N, const Ideal& I, long k,
                         long j, uint64_t seed);

}  // namespace lch
