// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#include "decomp.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>

#include "error.hpp"
#include "mvgcd.hpp"
#include "rng.hpp"
#include "textio.hpp"
#include "univar.hpp"

namespace lch {

std::string ideal_key(const Ideal& I) {
  std::string k;
  for (const auto& g : I.gb()) {
    if (!k.empty()) k += ",";
    k += poly_to_string(*I.ring(), g);
  }
  return k;
}

void AssSet::insert(PrimeIdeal p) {
  std::string k = ideal_key(p.ideal);
  size_t pos = 0;
  while (pos < keys_.size() && keys_[pos] < k) ++pos;
  if (pos < keys_.size() && keys_[pos] == k) return;
  keys_.insert(keys_.begin() + pos, std::move(k));
  items_.insert(items_.begin() + pos, std::move(p));
}

bool AssSet::contains(const Ideal& p) const {
  std::string k = ideal_key(p);
  for (const auto& kk : keys_)
    if (kk == k) return true;
  return false;
}

bool AssSet::set_equals(const AssSet& o) const {
  return keys_ == o.keys_;
}

bool AssSet::subset_of(const AssSet& o) const {
  for (const auto& k : keys_)
    if (std::find(o.keys_.begin(), o.keys_.end(), k) == o.keys_.end())
      return false;
  return true;
}

AssSet AssSet::union_of(const AssSet& a, const AssSet& b) {
  AssSet r = a;
  for (const auto& p : b.items_) r.insert(p);
  return r;
}

std::string assset_brief(const AssSet& s) {
  std::string out;
  for (const auto& p : s.items()) {
    if (!out.empty()) out += ";";
    out += "(" + ideal_key(p.ideal) + ")";
  }
  return out;
}

bool is_local_prime(const Ideal& p) {
  const Ring& R = *p.ring();
  for (const auto& g : p.gb())
    if (!R.field().is_zero(poly_constant_term(R, g))) return false;
  return true;
}

namespace {

// ---------------------------------------------------------------------------
// univariate bridges

uv::UPoly upoly_of(const Ring&, const Poly& f, int v) {
  uv::UPoly u;
  for (const auto& t : f.terms()) {
    int e = t.m[v];
    if (int(u.size()) <= e) u.resize(e + 1, 0);
    u[e] = std::get<int64_t>(t.c);
  }
  return uv::trim(std::move(u));
}

Poly poly_from_upoly(const Ring& R, const uv::UPoly& u, int v) {
  std::vector<Term> ts;
  for (size_t e = 0; e < u.size(); ++e) {
    if (u[e] == 0) continue;
    Monomial m(R.nvars());
    m[v] = int32_t(e);
    ts.push_back({m, R.field().from_int(u[e])});
  }
  return Poly::from_terms(R, std::move(ts));
}

// f(w) for a univariate f, evaluated at an arbitrary polynomial by Horner.
Poly compose_upoly(const Ring& R, const uv::UPoly& f, const Poly& w) {
  Poly acc = poly_zero();
  for (int e = uv::deg(f); e >= 0; --e) {
    acc = poly_mul(R, acc, w);
    if (f[e] != 0)
      acc = poly_add(R, acc, poly_const(R, R.field().from_int(f[e])));
  }
  return acc;
}

uv::UPoly usq_part(int64_t p, const uv::UPoly& f) {
  uv::UPoly s{1};
  for (const auto& [g, m] : uv::squarefree_decomposition(p, f))
    s = uv::mul(p, s, g);
  return s;
}

Poly safe_sqf(const Ring& R, const Poly& g) {
  try {
    return squarefree_part(R, g);
  } catch (const Error&) {
    return poly_monic(R, g);
  }
}

// ---------------------------------------------------------------------------
// generator-level splitting rules
//
// Each rule turns one generator g into a list of "pieces" f_1, ..., f_m with
// V(g) = V(f_1) u ... u V(f_m), so replacing g by each piece in turn covers
// the same variety.  Rules that need univariate factorization are limited to
// prime fields.

Monomial monomial_content(const Ring& R, const Poly& g) {
  Monomial c = g.terms()[0].m;
  for (const auto& t : g.terms())
    for (int i = 0; i < R.nvars(); ++i)
      if (t.m[i] < c[i]) c[i] = t.m[i];
  return c;
}

std::vector<Poly> content_pieces(const Ring& R, const Poly& g) {
  Monomial c = monomial_content(R, g);
  if (c.degree() == 0) return {};
  std::vector<Poly> out;
  for (int i = 0; i < R.nvars(); ++i)
    if (c[i] > 0) out.push_back(poly_var(R, i));
  auto co = poly_exact_div(R, g, poly_monomial(R, c, R.field().one()));
  if (!co) fail(Errc::internal, "monomial content does not divide");
  if (!co->is_constant()) out.push_back(poly_monic(R, *co));
  return out;
}

std::vector<Poly> univar_pieces(const Ring& R, const Poly& g, Rng& rng) {
  if (!R.field().is_prime_field()) return {};
  auto supp = poly_support(R, g);
  if (supp.size() != 1) return {};
  int v = supp[0];
  int64_t p = R.field().characteristic();
  auto fs = uv::factor(p, upoly_of(R, g, v), rng);
  std::vector<Poly> out;
  for (const auto& [f, m] : fs) out.push_back(poly_from_upoly(R, f, v));
  if (out.size() == 1 && poly_eq(R, out[0], poly_monic(R, g))) return {};
  return out;
}

// Homogeneous in exactly two variables: dehomogenize, factor, lift each
// factor back to its own degree.
std::vector<Poly> two_var_pieces(const Ring& R, const Poly& g, Rng& rng) {
  if (!R.field().is_prime_field()) return {};
  auto supp = poly_support(R, g);
  if (supp.size() != 2) return {};
  long d = g.terms()[0].m.degree();
  for (const auto& t : g.terms())
    if (t.m.degree() != d) return {};
  if (d < 2) return {};
  int vi = supp[0], vj = supp[1];
  int64_t p = R.field().characteristic();
  uv::UPoly u;
  for (const auto& t : g.terms()) {
    int e = t.m[vi];
    if (int(u.size()) <= e) u.resize(e + 1, 0);
    u[e] = std::get<int64_t>(t.c);
  }
  u = uv::trim(std::move(u));
  int d0 = uv::deg(u);
  std::vector<Poly> out;
  if (d0 < d) out.push_back(poly_var(R, vj));
  for (const auto& [f, m] : uv::factor(p, u, rng)) {
    std::vector<Term> ts;
    int df = uv::deg(f);
    for (int e = 0; e <= df; ++e) {
      if (f[e] == 0) continue;
      Monomial mo(R.nvars());
      mo[vi] = e;
      mo[vj] = df - e;
      ts.push_back({mo, R.field().from_int(f[e])});
    }
    out.push_back(Poly::from_terms(R, std::move(ts)));
  }
  if (out.size() == 1 && poly_eq(R, out[0], poly_monic(R, g))) return {};
  return out;
}

// Quadratic in some variable with a constant leading coefficient: if the
// discriminant is a perfect square the two root branches factor g exactly.
std::vector<Poly> quadratic_pieces(const Ring& R, const Poly& g) {
  const CoeffField& F = R.field();
  for (int v : poly_support(R, g)) {
    if (deg_wrt(g, v) != 2) continue;
    auto cs = coeffs_wrt(R, g, v);
    if (!cs[2].is_constant()) continue;
    Coeff a = poly_constant_term(R, cs[2]);
    const Poly& b = cs[1];
    const Poly& c = cs[0];
    Poly disc = poly_sub(
        R, poly_mul(R, b, b),
        poly_scale(R, F.mul(F.from_int(4), a), c));
    Coeff half = F.inv(F.mul(F.from_int(2), a));
    if (disc.is_zero())
      return {poly_add(R, poly_var(R, v), poly_scale(R, half, b))};
    Poly w = poly_one(R);
    Poly rem = disc;
    bool square = true;
    while (!rem.is_constant()) {
      Poly s = safe_sqf(R, rem);
      auto q = poly_exact_div(R, rem, poly_mul(R, s, s));
      if (!q) {
        square = false;
        break;
      }
      w = poly_mul(R, w, s);
      rem = *q;
    }
    if (!square) continue;
    auto root = F.sqrt(poly_constant_term(R, rem));
    if (!root) continue;
    w = poly_scale(R, *root, w);
    return {poly_add(R, poly_var(R, v),
                     poly_scale(R, half, poly_add(R, b, w))),
            poly_add(R, poly_var(R, v),
                     poly_scale(R, half, poly_sub(R, b, w)))};
  }
  return {};
}

std::vector<Poly> split_pieces(const Ring& R, const Poly& g, Rng& rng) {
  auto ps = content_pieces(R, g);
  if (!ps.empty()) return ps;
  ps = univar_pieces(R, g, rng);
  if (!ps.empty()) return ps;
  ps = two_var_pieces(R, g, rng);
  if (!ps.empty()) return ps;
  return quadratic_pieces(R, g);
}

// ---------------------------------------------------------------------------
// zero-dimensional path

struct ZKit {
  RingPtr R;
  Ideal J;
  std::vector<Monomial> B;
  std::map<std::vector<int32_t>, int> idx;
  int D;

  explicit ZKit(Ideal JJ) : R(JJ.ring()), J(std::move(JJ)) {
    B = std_monomials(*R, J.gb(), 200000);
    for (size_t i = 0; i < B.size(); ++i) idx[B[i].exps()] = int(i);
    D = int(B.size());
  }

  std::vector<Coeff> coords(const Poly& nf) const {
    std::vector<Coeff> v(D, R->field().zero());
    for (const auto& t : nf.terms()) {
      auto it = idx.find(t.m.exps());
      if (it == idx.end())
        fail(Errc::internal, "normal form left the staircase");
      v[it->second] = t.c;
    }
    return v;
  }

  // Minimal polynomial of f acting on R/J, by incremental elimination on
  // the normal forms of its powers.
  uv::UPoly minpoly(const Poly& f) const {
    const CoeffField& F = R->field();
    std::vector<int> pivots;
    std::vector<std::vector<Coeff>> rows, combos;
    Poly cur = J.nf(poly_one(*R));
    for (int k = 0; k <= D; ++k) {
      std::vector<Coeff> v = coords(cur);
      std::vector<Coeff> combo(D + 1, F.zero());
      combo[k] = F.one();
      for (size_t t = 0; t < rows.size(); ++t) {
        const Coeff& lead = v[pivots[t]];
        if (F.is_zero(lead)) continue;
        Coeff c = F.div(lead, rows[t][pivots[t]]);
        for (int i = 0; i < D; ++i)
          v[i] = F.sub(v[i], F.mul(c, rows[t][i]));
        for (int i = 0; i <= D; ++i)
          combo[i] = F.sub(combo[i], F.mul(c, combos[t][i]));
      }
      int piv = -1;
      for (int i = 0; i < D; ++i)
        if (!F.is_zero(v[i])) {
          piv = i;
          break;
        }
      if (piv < 0) {
        uv::UPoly m(k + 1, 0);
        for (int i = 0; i <= k; ++i) m[i] = std::get<int64_t>(combo[i]);
        return uv::trim(std::move(m));
      }
      pivots.push_back(piv);
      rows.push_back(std::move(v));
      combos.push_back(std::move(combo));
      cur = J.nf(poly_mul(*R, cur, f));
    }
    fail(Errc::internal, "no dependency among powers past the dimension");
  }
};

void push_children(const Ideal& J, const std::vector<Poly>& adds,
                   std::vector<Ideal>& stack) {
  for (const auto& f : adds) {
    std::vector<Poly> gens = J.gens();
    gens.push_back(f);
    stack.push_back(Ideal(J.ring(), std::move(gens)));
  }
}

void zero_dim_step(const Ideal& J, Rng& rng, std::vector<PrimeIdeal>& out,
                   std::vector<Ideal>& stack) {
  const RingPtr& R = J.ring();
  int64_t p = R->field().characteristic();
  int n = R->nvars();

  // Make the quotient reduced: force a squarefree univariate polynomial in
  // every variable.
  ZKit kit(J);
  for (int round = 0;; ++round) {
    if (round > 64) fail(Errc::internal, "radicalization did not settle");
    bool changed = false;
    for (int i = 0; i < n && !changed; ++i) {
      uv::UPoly m = kit.minpoly(poly_var(*R, i));
      uv::UPoly s = usq_part(p, m);
      if (uv::deg(s) < uv::deg(m)) {
        std::vector<Poly> gens = kit.J.gens();
        gens.push_back(poly_from_upoly(*R, s, i));
        kit = ZKit(Ideal(R, std::move(gens)));
        changed = true;
      }
    }
    if (!changed) break;
  }

  // Per-variable splits, and certification off a single variable when one
  // already generates the whole quotient.
  std::vector<uv::UPoly> mins(n);
  for (int i = 0; i < n; ++i) mins[i] = kit.minpoly(poly_var(*R, i));
  for (int i = 0; i < n; ++i) {
    auto fs = uv::factor(p, mins[i], rng);
    if (fs.size() >= 2) {
      std::vector<Poly> adds;
      for (const auto& [f, mu] : fs) adds.push_back(poly_from_upoly(*R, f, i));
      push_children(kit.J, adds, stack);
      return;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (uv::deg(mins[i]) == kit.D) {
      out.push_back({kit.J, 0, true});
      return;
    }
  }

  // Single maximal ideal iff some linear combination of the variables has an
  // irreducible minimal polynomial of full degree; otherwise a reducible
  // minimal polynomial splits the ideal.
  for (int tries = 0; tries < 24; ++tries) {
    Poly w = poly_var(*R, n - 1);
    for (int i = 0; i + 1 < n; ++i) {
      int64_t lam = int64_t(rng.below(uint64_t(std::min<int64_t>(p, 101))));
      if (lam == 0) continue;
      w = poly_add(*R, w,
                   poly_scale(*R, R->field().from_int(lam), poly_var(*R, i)));
    }
    uv::UPoly mw = kit.minpoly(w);
    auto fs = uv::factor(p, mw, rng);
    if (fs.size() >= 2) {
      std::vector<Poly> adds;
      for (const auto& [f, mu] : fs) adds.push_back(compose_upoly(*R, f, w));
      push_children(kit.J, adds, stack);
      return;
    }
    if (uv::deg(mw) == kit.D) {
      out.push_back({kit.J, 0, true});
      return;
    }
  }
  fail(Errc::decomposition_incomplete,
       "no separating element found for a zero-dimensional component");
}

// ---------------------------------------------------------------------------
// positive-dimensional path: saturate off an independent set, certify the
// transverse part through random finite cuts, recurse on the rest.

struct BlockView {
  RingPtr Rb;       // dependents first, block order
  RingPtr Rd;       // dependents only, grevlex
  std::vector<int> dep, U;
  std::vector<int> o2b, b2o;
  std::vector<Poly> gb;     // block Groebner basis
  Poly hb;                  // squarefree product of leading U-coefficients
  long fiber_degree;
};

// Coefficient of the leading dependent-part monomial, a polynomial in the
// independent variables.
Poly leading_u_coeff(const Ring& Rb, int ndep, const Poly& g) {
  std::vector<Term> ts;
  const Monomial& lead = g.terms()[0].m;
  for (const auto& t : g.terms()) {
    bool same = true;
    for (int i = 0; i < ndep; ++i)
      if (t.m[i] != lead[i]) {
        same = false;
        break;
      }
    if (!same) continue;
    Monomial m = t.m;
    for (int i = 0; i < ndep; ++i) m[i] = 0;
    ts.push_back({m, t.c});
  }
  return Poly::from_terms(Rb, std::move(ts));
}

BlockView block_view(const Ideal& J, const std::vector<int>& U) {
  const RingPtr& R = J.ring();
  int n = R->nvars();
  BlockView bv;
  bv.U = U;
  std::vector<bool> inU(n, false);
  for (int u : U) inU[u] = true;
  for (int i = 0; i < n; ++i)
    if (!inU[i]) bv.dep.push_back(i);
  int ndep = int(bv.dep.size());

  std::vector<std::string> names, dnames;
  for (int i : bv.dep) names.push_back(R->vars()[i]);
  dnames = names;
  for (int u : bv.U) names.push_back(R->vars()[u]);
  bv.Rb = make_derived_ring(R, names, MonomialOrder::block_elim(ndep));
  bv.Rd = make_derived_ring(R, dnames, MonomialOrder::grevlex());

  bv.o2b.assign(n, -1);
  bv.b2o.assign(n, -1);
  for (int t = 0; t < ndep; ++t) bv.o2b[bv.dep[t]] = t;
  for (size_t s = 0; s < bv.U.size(); ++s) bv.o2b[bv.U[s]] = ndep + int(s);
  for (int i = 0; i < n; ++i) bv.b2o[bv.o2b[i]] = i;

  std::vector<Poly> gens;
  for (const auto& g : J.gens()) gens.push_back(poly_map(*R, *bv.Rb, bv.o2b, g));
  bv.gb = buchberger(*bv.Rb, std::move(gens));

  Poly h = poly_one(*bv.Rb);
  std::vector<Poly> staircase;
  for (const auto& g : bv.gb) {
    h = poly_mul(*bv.Rb, h, leading_u_coeff(*bv.Rb, ndep, g));
    Monomial dm(ndep);
    for (int i = 0; i < ndep; ++i) dm[i] = g.terms()[0].m[i];
    staircase.push_back(poly_monomial(*bv.Rd, dm, bv.Rd->field().one()));
  }
  bv.hb = safe_sqf(*bv.Rb, h);
  bv.fiber_degree = long(std_monomials(*bv.Rd, staircase, 200000).size());
  return bv;
}

long fiber_count(const BlockView& bv, const Ideal& fiber) {
  return long(std_monomials(*bv.Rd, fiber.gb(), 200000).size());
}

void positive_dim_step(const Ideal& J, long dim, Rng& rng,
                       std::vector<PrimeIdeal>& out,
                       std::vector<Ideal>& stack) {
  const RingPtr& R = J.ring();
  int64_t p = R->field().characteristic();
  auto U = max_independent_sets(J)[0];
  BlockView bv = block_view(J, U);
  int ndep = int(bv.dep.size());

  Poly h = poly_map(*bv.Rb, *R, bv.b2o, bv.hb);
  if (!h.is_constant()) {
    Ideal Jsat = saturate(J, Ideal(R, {h}));
    if (!Jsat.equals(J)) {
      if (!Jsat.is_unit()) stack.push_back(Jsat);
      std::vector<Poly> gens = J.gens();
      gens.push_back(h);
      Ideal Jh(R, std::move(gens));
      if (!Jh.is_unit()) stack.push_back(std::move(Jh));
      return;
    }
  }

  // J is saturated with respect to h, so every minimal prime survives a
  // generic cut of the independent variables.  A cut where the fiber is a
  // single maximal ideal of full degree is evidence of irreducibility; a cut
  // with several points is neutral, because an irreducible component can
  // still split pointwise over a finite field.
  int successes = 0;
  for (int attempt = 0; attempt < 48 && successes < 3; ++attempt) {
    std::vector<std::pair<int, Coeff>> cut;
    for (size_t s = 0; s < bv.U.size(); ++s)
      cut.push_back({ndep + int(s),
                     R->field().from_int(int64_t(rng.below(uint64_t(p))))});
    Poly hval = poly_eval_partial(*bv.Rb, bv.hb, cut);
    if (R->field().is_zero(poly_constant_term(*bv.Rb, hval))) continue;
    std::vector<Poly> fgens;
    std::vector<int> drop(R->nvars(), -1);
    for (int t = 0; t < ndep; ++t) drop[t] = t;
    for (const auto& g : bv.gb)
      fgens.push_back(
          poly_map(*bv.Rb, *bv.Rd, drop, poly_eval_partial(*bv.Rb, g, cut)));
    Ideal fiber(bv.Rd, std::move(fgens));
    if (fiber_count(bv, fiber) != bv.fiber_degree) continue;
    std::vector<PrimeIdeal> fp;
    try {
      fp = minimal_primes(fiber, rng.raw());
    } catch (const Error& e) {
      if (e.code() == Errc::decomposition_incomplete) continue;
      throw;
    }
    if (fp.size() == 1 && fp[0].dim == 0 &&
        long(std_monomials(*bv.Rd, fp[0].ideal.gb(), 200000).size()) ==
            bv.fiber_degree)
      ++successes;
  }
  if (successes >= 3) {
    out.push_back({J, dim, true});
    return;
  }

  // Certification failed: look for a split through eliminants of single
  // dependent variables.
  for (int z : bv.dep) {
    std::vector<int> dropv;
    for (int t : bv.dep)
      if (t != z) dropv.push_back(t);
    Ideal E = eliminate(J, dropv);
    const Ring& Rk = *E.ring();
    std::vector<int> back(Rk.nvars());
    for (int i = 0; i < Rk.nvars(); ++i)
      back[i] = R->var_index(Rk.vars()[i]);
    for (const auto& e : E.gb()) {
      Poly eo = poly_map(Rk, *R, back, e);
      Poly s = safe_sqf(*R, eo);
      if (!J.contains(s)) {
        push_children(J, {s}, stack);
        return;
      }
      auto ps = split_pieces(*R, s, rng);
      if (ps.size() >= 2) {
        bool strict = true;
        for (const auto& f : ps)
          if (J.contains(f)) strict = false;
        if (strict) {
          push_children(J, ps, stack);
          return;
        }
      }
    }
  }
  fail(Errc::decomposition_incomplete,
       "a positive-dimensional component resisted certification and "
       "splitting");
}

// ---------------------------------------------------------------------------
// driver

void decompose_one(const Ideal& J, Rng& rng, std::vector<PrimeIdeal>& out,
                   std::vector<Ideal>& stack) {
  const RingPtr& R = J.ring();
  int n = R->nvars();
  if (J.is_unit()) return;
  if (J.is_zero_ideal()) {
    out.push_back({J, long(n), true});
    return;
  }
  const auto& G = J.gb();

  bool linear = true, monomial = true;
  for (const auto& g : G) {
    if (g.total_degree() > 1) linear = false;
    if (g.nterms() != 1) monomial = false;
  }
  if (linear) {
    out.push_back({J, krull_dim(J).value(), true});
    return;
  }
  if (monomial) {
    if (n > 20) fail(Errc::internal, "too many variables for cover search");
    std::vector<uint32_t> supp;
    for (const auto& g : G) {
      uint32_t m = 0;
      for (int i = 0; i < n; ++i)
        if (g.terms()[0].m[i] > 0) m |= 1u << i;
      supp.push_back(m);
    }
    std::vector<uint32_t> found;
    for (int k = 1; k <= n; ++k) {
      for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (int(std::popcount(mask)) != k) continue;
        bool covers = true;
        for (uint32_t s : supp)
          if ((s & mask) == 0) {
            covers = false;
            break;
          }
        if (!covers) continue;
        bool redundant = false;
        for (uint32_t f : found)
          if ((f & mask) == f) {
            redundant = true;
            break;
          }
        if (redundant) continue;
        found.push_back(mask);
        std::vector<Poly> gens;
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) gens.push_back(poly_var(*R, i));
        out.push_back(
            {Ideal(R, std::move(gens)), long(n - k), true});
      }
    }
    return;
  }

  // Replace generators by their squarefree parts; this keeps the variety.
  {
    bool changed = false;
    std::vector<Poly> gens2;
    for (const auto& g : G) {
      Poly s = safe_sqf(*R, g);
      if (!poly_eq(*R, s, poly_monic(*R, g))) changed = true;
      gens2.push_back(s);
    }
    if (changed) {
      Ideal J2(R, std::move(gens2));
      if (!J2.equals(J)) {
        stack.push_back(std::move(J2));
        return;
      }
    }
  }

  // Factor a generator through the available rules.
  for (size_t gi = 0; gi < G.size(); ++gi) {
    auto ps = split_pieces(*R, G[gi], rng);
    if (ps.empty()) continue;
    std::vector<Ideal> children;
    bool ok = true;
    for (const auto& f : ps) {
      std::vector<Poly> gens;
      for (size_t i = 0; i < G.size(); ++i)
        if (i != gi) gens.push_back(G[i]);
      gens.push_back(f);
      Ideal child(R, std::move(gens));
      if (child.equals(J)) {
        ok = false;
        break;
      }
      children.push_back(std::move(child));
    }
    if (!ok) continue;
    for (auto& c : children) stack.push_back(std::move(c));
    return;
  }

  if (!R->field().is_prime_field())
    fail(Errc::unsupported_field,
         "decomposition over the rationals handles only monomial, linear and "
         "directly factorable inputs; use a prime field");

  long dim = krull_dim(J).value();
  if (dim == 0)
    zero_dim_step(J, rng, out, stack);
  else
    positive_dim_step(J, dim, rng, out, stack);
}

}  // namespace

std::vector<PrimeIdeal> minimal_primes(const Ideal& I, uint64_t seed) {
  Rng rng(seed ^ fnv1a64(ideal_key(I)), "minimal-primes");
  std::vector<PrimeIdeal> found;
  std::vector<Ideal> stack{I};
  int nodes = 0;
  while (!stack.empty()) {
    if (++nodes > 512)
      fail(Errc::internal, "decomposition work list did not settle");
    Ideal J = std::move(stack.back());
    stack.pop_back();
    decompose_one(J, rng, found, stack);
  }

  // Deduplicate and keep only the minimal ones.
  std::vector<PrimeIdeal> uniq;
  std::vector<std::string> keys;
  for (auto& pr : found) {
    std::string k = ideal_key(pr.ideal);
    if (std::find(keys.begin(), keys.end(), k) != keys.end()) continue;
    keys.push_back(std::move(k));
    uniq.push_back(std::move(pr));
  }
  std::vector<PrimeIdeal> out;
  std::vector<std::string> okeys;
  for (size_t i = 0; i < uniq.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < uniq.size(); ++j)
      if (i != j && uniq[i].ideal.contains_ideal(uniq[j].ideal)) {
        minimal = false;
        break;
      }
    if (minimal) {
      out.push_back(uniq[i]);
      okeys.push_back(keys[i]);
    }
  }
  std::vector<size_t> order(out.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return okeys[a] < okeys[b]; });
  std::vector<PrimeIdeal> sorted;
  for (size_t i : order) sorted.push_back(std::move(out[i]));
  return sorted;
}

AssSet associated_primes(const ModulePresentation& M, uint64_t seed) {
  const RingPtr& R = M.ring();
  int n = R->nvars();
  AssSet out;
  if (M.is_zero_module()) return out;
  auto S1 = ModulePresentation::free_module(R, 1);
  for (int c = 0; c <= n; ++c) {
    auto E = ext_module(c, M, S1);
    if (E.is_zero_module()) continue;
    Ideal A = E.annihilator();
    if (A.is_unit()) continue;
    for (const auto& q : minimal_primes(A, seed)) {
      if (n - q.dim != c) continue;
      if (!is_local_prime(q.ideal)) continue;
      out.insert(q);
    }
  }
  return out;
}

bool is_associated_oracle(const Ideal& p, const ModulePresentation& M) {
  require_same_ring(p.ring(), M.ring(), "is_associated_oracle");
  auto H = ext_module(0, ModulePresentation::cyclic(p), M);
  if (H.is_zero_module()) return false;
  return p.contains_ideal(H.annihilator());
}

}  // namespace lch
