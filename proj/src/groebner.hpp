// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "extint.hpp"
#include "poly.hpp"

namespace lch {

// Computes the unique reduced Groebner basis (monic, interreduced, tails in
// normal form) of the span of `gens` under the ring's order, sorted
// descending by leading monomial.  The zero ideal yields an empty basis.
std::vector<Poly> buchberger(const Ring& ring, std::vector<Poly> gens);

// Full normal form against an arbitrary basis; unique when the basis is a
// reduced Groebner basis.
Poly normal_form(const Ring& ring, const Poly& f, const std::vector<Poly>& G);

// Finitely generated ideal bound to its ring context, with a lazily computed
// write-once reduced Groebner basis.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Poly> gens);
  // Wraps an already reduced Groebner basis without recomputing it.
  static Ideal with_gb(RingPtr ring, std::vector<Poly> gb);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }
  const std::vector<Poly>& gb() const;

  bool is_zero_ideal() const { return gb().empty(); }
  bool is_unit() const;
  Poly nf(const Poly& f) const { return normal_form(*ring_, f, gb()); }
  bool contains(const Poly& f) const { return nf(f).is_zero(); }
  bool contains_ideal(const Ideal& other) const;
  bool equals(const Ideal& other) const;

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
  mutable std::shared_ptr<std::vector<Poly>> gb_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
// Generated by all degree-t products of the generators.
Ideal ideal_power(const Ideal& a, long t);
// Generated by the listed per-generator powers a_i^{t_i}.
Ideal ideal_generator_powers(const Ideal& a, const std::vector<long>& ts);

// Internal elimination core.  `ext` must order the first `ndrop` variables as
// a dominant block; returns the Groebner basis elements of <gens> that are
// free of those variables, still expressed in `ext`.
std::vector<Poly> eliminate_raw(const Ring& ext, const std::vector<Poly>& gens,
                                int ndrop);

// Elimination ideal I ∩ k[remaining vars], over a freshly derived grevlex
// ring on the remaining variables (in their original relative order).
Ideal eliminate(const Ideal& I, const std::vector<int>& drop_vars);

Ideal intersect(const Ideal& a, const Ideal& b);
Ideal colon(const Ideal& I, const Ideal& J);
Ideal saturate(const Ideal& I, const Ideal& J);

// Membership of f in the radical of I (Rabinowitsch trick).
bool radical_membership(const Ideal& I, const Poly& f);

// Krull dimension of R/I via maximal independent sets modulo LT(I);
// -1 for the unit ideal.
ExtInt krull_dim(const Ideal& I);
// n - dim for proper ideals.
long codim(const Ideal& I);

// All maximal (by size) subsets U of variables with k[U] ∩ LT(I) = 0, in a
// deterministic order.  Unit ideal yields none; the zero ideal yields all
// variables.
std::vector<std::vector<int>> max_independent_sets(const Ideal& I);

// Monomials outside LT(<G>); errors if the count exceeds `cap` (the staircase
// is infinite exactly when the ideal is not zero-dimensional).
std::vector<Monomial> std_monomials(const Ring& ring,
                                    const std::vector<Poly>& G, size_t cap);

// Fresh variable name not occurring in the ring.
std::string fresh_var_name(const Ring& ring, const std::string& stem);

}  // namespace lch
