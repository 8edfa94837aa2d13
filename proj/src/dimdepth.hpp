// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "decomp.hpp"
#include "rng.hpp"

namespace lch {

// Primes of dimension at least k.
AssSet filter_dim_ge(const AssSet& s, long k);

// x has a nonzero kernel acting on M.
bool is_zerodivisor(const Poly& x, const ModulePresentation& M);

// First position (1-based) where x_i is a zerodivisor on N/(x_1..x_{i-1})N;
// 0 when the whole list is regular.  The zero module accepts everything.
long regular_sequence_fail_index(const std::vector<Poly>& xs,
                                 const ModulePresentation& N);

// Dimension-filtered variant: first position (1-based) where x_i lies in an
// associated prime of dimension above k of N/(x_1..x_{i-1})N; 0 when the
// whole list passes.  At k = -1 this coincides with the regular-sequence
// test.  Elements must have zero constant term (raises not-local otherwise).
long dim_sequence_fail_index(const std::vector<Poly>& xs,
                             const ModulePresentation& N, long k,
                             uint64_t seed);

// Element of I outside every listed prime.  Raises no-avoider when I lies
// inside one of the primes (none can exist).  Otherwise tries the Groebner
// generators, their sum, then seeded small combinations, monomial multiples
// and wide random combinations; the monomial rung supplies higher-degree
// avoiders when linear ones do not exist over a small field.  Raises
// field-too-small only if the whole ladder is exhausted.
Poly avoid_primes(const Ideal& I, const std::vector<Ideal>& primes, Rng& rng);

// Ann(M/IM), the ideal that cuts out the support of M/IM.
Ideal ideal_IM(const Ideal& I, const ModulePresentation& M);

struct DepthResult {
  ExtInt depth;
  // Maximal sequence found in I whose members avoid all associated primes of
  // dimension above k at each stage; empty when the depth is infinite.
  std::vector<Poly> witness;
};

// Generalized depth of I on N relative to the dimension cutoff k >= -1.
// Infinite iff dim(N/IN) <= k; k = -1 is ordinary depth.  Greedy and
// constructive: each step picks an avoider and passes to the quotient.
// I must be proper in the local sense (all basis elements with zero constant
// term); raises not-local otherwise.
DepthResult depth_k(const Ideal& I, const ModulePresentation& N, long k,
                    uint64_t seed);

// Independent characterization through Ext modules: the least j such that
// Ann Ext^j(R/I, N) + Ann(N/IN) cuts out a set of dimension > k.
ExtInt depth_k_ext_oracle(const Ideal& I, const ModulePresentation& N, long k);

}  // namespace lch
