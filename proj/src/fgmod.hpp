// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "groebner.hpp"

namespace lch {

// Element of a free module R^r, stored as r polynomials.
using Vec = std::vector<Poly>;

bool vec_is_zero(const Vec& v);
Vec vec_zero(int rank);
Vec vec_basis(const Ring& ring, int rank, int i);
Vec vec_add(const Ring& ring, const Vec& a, const Vec& b);
Vec vec_sub(const Ring& ring, const Vec& a, const Vec& b);
Vec vec_scale(const Ring& ring, const Coeff& c, const Vec& a);
Vec vec_scale_poly(const Ring& ring, const Poly& f, const Vec& a);
// a - c * x^m * b
Vec vec_axpy(const Ring& ring, const Vec& a, const Coeff& c, const Monomial& m,
             const Vec& b);
bool vec_eq(const Ring& ring, const Vec& a, const Vec& b);

// Leading module term under position-over-term: position dominates (lower
// index is greater), ties broken by the ring order.
struct ModTerm {
  int pos;
  Monomial m;
  Coeff c;
};
ModTerm vec_lead(const Vec& v);

// Reduced module Groebner basis of a submodule of R^rank under POT, sorted
// descending by leading module term.
std::vector<Vec> module_gb(const Ring& ring, int rank,
                           const std::vector<Vec>& gens);
Vec vec_nf(const Ring& ring, const Vec& v, const std::vector<Vec>& G);

// Generators of the syzygy module of `gens` (kernel of R^s -> R^rank), via
// the augmented-basis construction.
std::vector<Vec> syzygies(const Ring& ring, int rank,
                          const std::vector<Vec>& gens);

// Chain F_0 <- F_1 <- ... with diffs[k] the matrix F_{k+1} -> F_k given by
// columns in R^{ranks[k]}; exact at every F_k with k >= 1 by construction.
// Unit (degree-0) entries are split off as they arise.
struct Resolution {
  std::vector<int> ranks;
  std::vector<std::vector<Vec>> diffs;
  int rank_at(int j) const {
    return j >= 0 && j < int(ranks.size()) ? ranks[j] : 0;
  }
};

// Finitely presented module coker(R^s -> R^rank), bound to its ring context.
class ModulePresentation {
 public:
  ModulePresentation(RingPtr ring, int rank, std::vector<Vec> rels);
  static ModulePresentation free_module(RingPtr ring, int rank);
  // S/I as a rank-1 quotient.
  static ModulePresentation cyclic(const Ideal& I);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  const std::vector<Vec>& rels() const { return rels_; }

  const std::vector<Vec>& gb() const;
  Vec nf(const Vec& v) const { return vec_nf(*ring_, v, gb()); }
  bool element_is_zero(const Vec& v) const { return vec_is_zero(nf(v)); }
  bool is_zero_module() const;

  Ideal annihilator() const;
  ExtInt support_dim() const;

  // M / f M and M / I M as new presentations on the same generators.
  ModulePresentation quotient_by(const Poly& f) const;
  ModulePresentation quotient_by_ideal(const Ideal& I) const;

  // Free resolution of this module with at most `length` differentials;
  // shorter if a kernel vanishes earlier.  Cached and extended on demand.
  const Resolution& resolution(int length) const;

 private:
  RingPtr ring_;
  int rank_;
  std::vector<Vec> rels_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// Ext^j(M, N) as an explicit finitely presented module.  j = 0 is Hom(M, N).
ModulePresentation ext_module(int j, const ModulePresentation& M,
                              const ModulePresentation& N);

// Every generator of I acts nilpotently on N.
bool is_torsion_by(const ModulePresentation& N, const Ideal& I);

}  // namespace lch
