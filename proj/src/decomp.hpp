// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fgmod.hpp"

namespace lch {

// A prime ideal in canonical form (reduced Groebner basis), with the
// dimension of its quotient and a certification flag set by the producing
// algorithm.
struct PrimeIdeal {
  Ideal ideal;
  long dim;
  bool certified;
};

// Canonical serialization key of an ideal: the reduced basis rendered and
// joined; used for deterministic set ordering.
std::string ideal_key(const Ideal& I);

// Sorted duplicate-free set of primes, ordered by ideal_key.
class AssSet {
 public:
  void insert(PrimeIdeal p);
  const std::vector<PrimeIdeal>& items() const { return items_; }
  size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool contains(const Ideal& p) const;
  bool set_equals(const AssSet& o) const;
  bool subset_of(const AssSet& o) const;
  static AssSet union_of(const AssSet& a, const AssSet& b);

 private:
  std::vector<PrimeIdeal> items_;
  std::vector<std::string> keys_;
};

// One-line canonical rendering of a prime set: each prime as its key in
// parentheses, joined by semicolons.  Empty set renders as the empty
// string; the zero ideal renders as "()".
std::string assset_brief(const AssSet& s);

// A prime of the localization at the irrelevant maximal ideal: every
// generator has zero constant term.
bool is_local_prime(const Ideal& p);

// Minimal primes of I.  Over F_p: monomial ideals, linear quotients,
// zero-dimensional ideals and independent-set recursion with specialization
// certificates; splitting is by squarefree parts, monomial content,
// univariate-support factors and homogeneous two-variable factors.  Over Q
// only the paths that need no univariate factorization are available;
// anything deeper raises unsupported-field.  Inputs that resist every
// implemented split raise a math-domain error instead of guessing.
std::vector<PrimeIdeal> minimal_primes(const Ideal& I, uint64_t seed);

// Ass(M) over the local ring at (vars), via Ext codimension filtering:
// p is associated iff p is minimal over Ann Ext^c(M, R) with codim p = c.
AssSet associated_primes(const ModulePresentation& M, uint64_t seed);

// Definition-level membership test: p is associated to M iff M has an
// element with annihilator exactly p, decided through Hom(R/p, M).
bool is_associated_oracle(const Ideal& p, const ModulePresentation& M);

}  // namespace lch
