// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#include "mvgcd.hpp"

#include "error.hpp"

namespace lch {

int deg_wrt(const Poly& f, int v) {
  int d = -1;
  for (const auto& t : f.terms())
    if (t.m[v] > d) d = t.m[v];
  return d;
}

std::vector<Poly> coeffs_wrt(const Ring& ring, const Poly& f, int v) {
  int d = deg_wrt(f, v);
  std::vector<std::vector<Term>> buckets(d + 1);
  for (const auto& t : f.terms()) {
    Monomial m = t.m;
    int e = m[v];
    m[v] = 0;
    buckets[e].push_back({std::move(m), t.c});
  }
  std::vector<Poly> out;
  for (auto& b : buckets) out.push_back(Poly::from_terms(ring, std::move(b)));
  return out;
}

Poly from_coeffs(const Ring& ring, const std::vector<Poly>& cs, int v) {
  std::vector<Term> ts;
  for (size_t e = 0; e < cs.size(); ++e) {
    for (const auto& t : cs[e].terms()) {
      Monomial m = t.m;
      m[v] += int32_t(e);
      ts.push_back({std::move(m), t.c});
    }
  }
  return Poly::from_terms(ring, std::move(ts));
}

namespace {

int main_var(const Ring& ring, const Poly& a, const Poly& b) {
  int v = -1;
  for (const Poly* f : {&a, &b})
    for (const auto& t : f->terms())
      for (int i = 0; i < ring.nvars(); ++i)
        if (t.m[i] > 0 && i > v) v = i;
  return v;
}

Poly normalize_monic(const Ring& ring, const Poly& f) {
  return f.is_zero() ? f : poly_monic(ring, f);
}

Poly content_wrt(const Ring& ring, const Poly& f, int v) {
  Poly c;
  for (const auto& coeff : coeffs_wrt(ring, f, v)) {
    if (coeff.is_zero()) continue;
    c = mv_gcd(ring, c, coeff);
    if (c.is_constant() && !c.is_zero()) break;
  }
  return c;
}

// Pseudo-remainder of a by b with respect to v, with the standard
// lc(b)^(delta+1) premultiplier.
Poly prem(const Ring& ring, const Poly& a, const Poly& b, int v) {
  int db = deg_wrt(b, v);
  Poly lcb = coeffs_wrt(ring, b, v)[db];
  Poly r = a;
  int e = deg_wrt(a, v) - db + 1;
  while (!r.is_zero() && deg_wrt(r, v) >= db) {
    int dr = deg_wrt(r, v);
    Poly lcr = coeffs_wrt(ring, r, v)[dr];
    Monomial shift(ring.nvars());
    shift[v] = dr - db;
    Poly t = poly_mul(ring, lcr, poly_monomial(ring, shift, ring.field().one()));
    r = poly_sub(ring, poly_mul(ring, lcb, r), poly_mul(ring, t, b));
    --e;
  }
  for (; e > 0; --e) r = poly_mul(ring, lcb, r);
  return r;
}

}  // namespace

Poly mv_gcd(const Ring& ring, const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize_monic(ring, b);
  if (b.is_zero()) return normalize_monic(ring, a);
  if (a.is_constant() || b.is_constant()) return poly_one(ring);
  int v = main_var(ring, a, b);
  if (deg_wrt(a, v) == 0 || deg_wrt(b, v) == 0) {
    // One side is free of the top variable; the gcd divides its coefficients.
    const Poly& free_side = deg_wrt(a, v) == 0 ? a : b;
    const Poly& other = deg_wrt(a, v) == 0 ? b : a;
    return mv_gcd(ring, free_side, content_wrt(ring, other, v));
  }
  Poly ca = content_wrt(ring, a, v);
  Poly cb = content_wrt(ring, b, v);
  Poly c = mv_gcd(ring, ca, cb);
  Poly A = *poly_exact_div(ring, a, ca);
  Poly B = *poly_exact_div(ring, b, cb);
  if (deg_wrt(A, v) < deg_wrt(B, v)) std::swap(A, B);
  for (;;) {
    Poly R = prem(ring, A, B, v);
    if (R.is_zero()) {
      Poly pp = *poly_exact_div(ring, B, content_wrt(ring, B, v));
      return normalize_monic(ring, poly_mul(ring, c, pp));
    }
    if (deg_wrt(R, v) == 0) return normalize_monic(ring, c);
    A = std::move(B);
    B = *poly_exact_div(ring, R, content_wrt(ring, R, v));
  }
}

Poly squarefree_part(const Ring& ring, const Poly& f) {
  if (f.is_zero()) return f;
  if (f.is_constant()) return poly_one(ring);
  auto supp = poly_support(ring, f);
  int v = supp.back();
  Poly cont = content_wrt(ring, f, v);
  Poly pp = *poly_exact_div(ring, f, cont);
  Poly d = poly_derivative(ring, pp, v);
  if (d.is_zero())
    fail(Errc::internal,
         "squarefree part: derivative vanished (degree >= characteristic)");
  Poly g = mv_gcd(ring, pp, d);
  Poly sq = *poly_exact_div(ring, pp, g);
  return normalize_monic(ring, poly_mul(ring, squarefree_part(ring, cont), sq));
}

}  // namespace lch
