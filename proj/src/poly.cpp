// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#include "poly.hpp"

#include <algorithm>

#include "error.hpp"

namespace lch {

Poly carrier(std::vector<Term> sorted) {
  Poly p;
  p.terms_ = std::move(sorted);
  return p;
}

Poly Poly::from_terms(const Ring& ring, std::vector<Term> terms) {
  const auto& ord = ring.order();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ord.cmp(a.m, b.m) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  const auto& F = ring.field();
  for (auto& t : terms) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = F.add(out.back().c, t.c);
    } else {
      if (!out.empty() && F.is_zero(out.back().c)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && F.is_zero(out.back().c)) out.pop_back();
  return carrier(std::move(out));
}

Poly poly_zero() { return Poly(); }

Poly poly_const(const Ring& ring, const Coeff& c) {
  if (ring.field().is_zero(c)) return Poly();
  std::vector<Term> t{{Monomial(ring.nvars()), c}};
  return carrier(std::move(t));
}

Poly poly_one(const Ring& ring) { return poly_const(ring, ring.field().one()); }

Poly poly_var(const Ring& ring, int var) {
  Monomial m(ring.nvars());
  m[var] = 1;
  std::vector<Term> t{{m, ring.field().one()}};
  return carrier(std::move(t));
}

Poly poly_monomial(const Ring& ring, const Monomial& m, const Coeff& c) {
  if (ring.field().is_zero(c)) return Poly();
  std::vector<Term> t{{m, c}};
  return carrier(std::move(t));
}

bool poly_eq(const Ring& ring, const Poly& a, const Poly& b) {
  if (a.nterms() != b.nterms()) return false;
  const auto& F = ring.field();
  for (size_t i = 0; i < a.nterms(); ++i) {
    if (!(a.terms()[i].m == b.terms()[i].m)) return false;
    if (!F.eq(a.terms()[i].c, b.terms()[i].c)) return false;
  }
  return true;
}

namespace {

// Merge two canonical term lists, combining b-terms scaled by (c, m).
Poly merge_scaled(const Ring& ring, const Poly& a, const Coeff& c,
                  const Monomial* m, const Poly& b) {
  const auto& F = ring.field();
  const auto& ord = ring.order();
  std::vector<Term> out;
  out.reserve(a.nterms() + b.nterms());
  size_t i = 0, j = 0;
  while (i < a.nterms() || j < b.nterms()) {
    if (j >= b.nterms()) {
      out.push_back(a.terms()[i++]);
      continue;
    }
    Monomial bm = m ? (*m) * b.terms()[j].m : b.terms()[j].m;
    Coeff bc = F.mul(c, b.terms()[j].c);
    if (i >= a.nterms()) {
      if (!F.is_zero(bc)) out.push_back({std::move(bm), std::move(bc)});
      ++j;
      continue;
    }
    int cv = ord.cmp(a.terms()[i].m, bm);
    if (cv > 0) {
      out.push_back(a.terms()[i++]);
    } else if (cv < 0) {
      if (!F.is_zero(bc)) out.push_back({std::move(bm), std::move(bc)});
      ++j;
    } else {
      Coeff s = F.add(a.terms()[i].c, bc);
      if (!F.is_zero(s)) out.push_back({a.terms()[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  return carrier(std::move(out));
}

}  // namespace

Poly poly_add(const Ring& ring, const Poly& a, const Poly& b) {
  return merge_scaled(ring, a, ring.field().one(), nullptr, b);
}

Poly poly_sub(const Ring& ring, const Poly& a, const Poly& b) {
  return merge_scaled(ring, a, ring.field().neg(ring.field().one()), nullptr,
                      b);
}

Poly poly_neg(const Ring& ring, const Poly& a) {
  return poly_scale(ring, ring.field().neg(ring.field().one()), a);
}

Poly poly_scale(const Ring& ring, const Coeff& c, const Poly& a) {
  const auto& F = ring.field();
  if (F.is_zero(c)) return Poly();
  std::vector<Term> out;
  out.reserve(a.nterms());
  for (const auto& t : a.terms()) out.push_back({t.m, F.mul(c, t.c)});
  return carrier(std::move(out));
}

Poly poly_scale_term(const Ring& ring, const Coeff& c, const Monomial& m,
                     const Poly& a) {
  const auto& F = ring.field();
  if (F.is_zero(c)) return Poly();
  std::vector<Term> out;
  out.reserve(a.nterms());
  for (const auto& t : a.terms()) out.push_back({m * t.m, F.mul(c, t.c)});
  return carrier(std::move(out));
}

Poly poly_axpy(const Ring& ring, const Poly& a, const Coeff& c,
               const Monomial& m, const Poly& b) {
  return merge_scaled(ring, a, ring.field().neg(c), &m, b);
}

Poly poly_mul(const Ring& ring, const Poly& a, const Poly& b) {
  Poly acc;
  for (const auto& t : a.terms())
    acc = merge_scaled(ring, acc, t.c, &t.m, b);
  return acc;
}

Poly poly_monic(const Ring& ring, const Poly& a) {
  if (a.is_zero()) return a;
  return poly_scale(ring, ring.field().inv(a.lc()), a);
}

Poly poly_pow(const Ring& ring, const Poly& a, long e) {
  if (e < 0) fail(Errc::malformed_input, "negative polynomial power");
  Poly r = poly_one(ring);
  Poly base = a;
  while (e > 0) {
    if (e & 1) r = poly_mul(ring, r, base);
    e >>= 1;
    if (e) base = poly_mul(ring, base, base);
  }
  return r;
}

std::optional<Poly> poly_exact_div(const Ring& ring, const Poly& a,
                                   const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  const auto& F = ring.field();
  Poly rem = a;
  std::vector<Term> q;
  while (!rem.is_zero()) {
    if (!b.lm().divides(rem.lm())) return std::nullopt;
    Coeff c = F.div(rem.lc(), b.lc());
    Monomial m = rem.lm() / b.lm();
    q.push_back({m, c});
    rem = poly_axpy(ring, rem, c, m, b);
  }
  return Poly::from_terms(ring, std::move(q));
}

Poly poly_derivative(const Ring& ring, const Poly& a, int var) {
  const auto& F = ring.field();
  std::vector<Term> out;
  for (const auto& t : a.terms()) {
    if (t.m[var] == 0) continue;
    Coeff c = F.mul(t.c, F.from_int(t.m[var]));
    if (F.is_zero(c)) continue;
    Monomial m = t.m;
    m[var] -= 1;
    out.push_back({std::move(m), std::move(c)});
  }
  return Poly::from_terms(ring, std::move(out));
}

Poly poly_subst(const Ring& ring, const Poly& a, int var, const Poly& repl) {
  Poly acc;
  for (const auto& t : a.terms()) {
    Monomial m = t.m;
    int32_t e = m[var];
    m[var] = 0;
    Poly piece = poly_monomial(ring, m, t.c);
    if (e > 0) piece = poly_mul(ring, piece, poly_pow(ring, repl, e));
    acc = poly_add(ring, acc, piece);
  }
  return acc;
}

Poly poly_eval_partial(const Ring& ring, const Poly& a,
                       const std::vector<std::pair<int, Coeff>>& values) {
  const auto& F = ring.field();
  std::vector<Term> out;
  for (const auto& t : a.terms()) {
    Monomial m = t.m;
    Coeff c = t.c;
    for (const auto& [v, val] : values) {
      int32_t e = m[v];
      if (e == 0) continue;
      m[v] = 0;
      for (int32_t i = 0; i < e; ++i) c = F.mul(c, val);
    }
    if (!F.is_zero(c)) out.push_back({std::move(m), std::move(c)});
  }
  return Poly::from_terms(ring, std::move(out));
}

Coeff poly_constant_term(const Ring& ring, const Poly& a) {
  for (const auto& t : a.terms())
    if (t.m.is_one()) return t.c;
  return ring.field().zero();
}

Poly poly_map(const Ring& src, const Ring& dst, const std::vector<int>& idx,
              const Poly& f) {
  std::vector<Term> out;
  out.reserve(f.nterms());
  for (const auto& t : f.terms()) {
    Monomial m(dst.nvars());
    for (int i = 0; i < src.nvars(); ++i) {
      if (t.m[i] == 0) continue;
      if (idx[i] < 0)
        fail(Errc::internal, "poly_map: dropped variable has nonzero exponent");
      m[idx[i]] = t.m[i];
    }
    out.push_back({std::move(m), t.c});
  }
  return Poly::from_terms(dst, std::move(out));
}

std::vector<int> poly_support(const Ring& ring, const Poly& f) {
  std::vector<bool> used(ring.nvars(), false);
  for (const auto& t : f.terms())
    for (int i = 0; i < ring.nvars(); ++i)
      if (t.m[i] > 0) used[i] = true;
  std::vector<int> out;
  for (int i = 0; i < ring.nvars(); ++i)
    if (used[i]) out.push_back(i);
  return out;
}

}  // namespace lch
