// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "ring.hpp"

namespace lch {

struct Term {
  Monomial m;
  Coeff c;
};

// Polynomial in canonical form: terms strictly descending in the ring's
// monomial order, no zero coefficients.  The zero polynomial has no terms.
class Poly {
 public:
  Poly() = default;

  // Normalizes: sorts, merges equal monomials, drops zeros.
  static Poly from_terms(const Ring& ring, std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  size_t nterms() const { return terms_.size(); }

  const Term& lt() const { return terms_.front(); }
  const Monomial& lm() const { return terms_.front().m; }
  const Coeff& lc() const { return terms_.front().c; }

  long total_degree() const {
    long d = -1;
    for (const auto& t : terms_)
      if (t.m.degree() > d) d = t.m.degree();
    return d;
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
  }

 private:
  std::vector<Term> terms_;
  friend Poly carrier(std::vector<Term> sorted);
};

// Internal: wraps an already-canonical term list.
Poly carrier(std::vector<Term> sorted);

Poly poly_zero();
Poly poly_const(const Ring& ring, const Coeff& c);
Poly poly_one(const Ring& ring);
Poly poly_var(const Ring& ring, int var);
Poly poly_monomial(const Ring& ring, const Monomial& m, const Coeff& c);

bool poly_eq(const Ring& ring, const Poly& a, const Poly& b);
Poly poly_add(const Ring& ring, const Poly& a, const Poly& b);
Poly poly_sub(const Ring& ring, const Poly& a, const Poly& b);
Poly poly_neg(const Ring& ring, const Poly& a);
Poly poly_mul(const Ring& ring, const Poly& a, const Poly& b);
Poly poly_scale(const Ring& ring, const Coeff& c, const Poly& a);
// c * x^m * a
Poly poly_scale_term(const Ring& ring, const Coeff& c, const Monomial& m,
                     const Poly& a);
// a - c * x^m * b, the reduction workhorse.
Poly poly_axpy(const Ring& ring, const Poly& a, const Coeff& c,
               const Monomial& m, const Poly& b);
Poly poly_monic(const Ring& ring, const Poly& a);
Poly poly_pow(const Ring& ring, const Poly& a, long e);

// Exact polynomial division: returns a/b if b divides a, else nullopt.
std::optional<Poly> poly_exact_div(const Ring& ring, const Poly& a,
                                   const Poly& b);

Poly poly_derivative(const Ring& ring, const Poly& a, int var);

// Substitute `repl` for variable `var`.
Poly poly_subst(const Ring& ring, const Poly& a, int var, const Poly& repl);

// Evaluate the listed variables at field constants, keeping the others.
Poly poly_eval_partial(const Ring& ring, const Poly& a,
                       const std::vector<std::pair<int, Coeff>>& values);

// Constant term (coefficient of the monomial 1).
Coeff poly_constant_term(const Ring& ring, const Poly& a);

// Map a polynomial into another ring along a variable index map:
// var i of the source becomes var idx[i] of the target.  All exponents on
// variables with idx[i] < 0 must be zero.
Poly poly_map(const Ring& src, const Ring& dst, const std::vector<int>& idx,
              const Poly& f);

// Variables with nonzero exponent somewhere in f.
std::vector<int> poly_support(const Ring& ring, const Poly& f);

}  // namespace lch
