// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#include "fgmod.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "error.hpp"

namespace lch {

bool vec_is_zero(const Vec& v) {
  for (const auto& f : v)
    if (!f.is_zero()) return false;
  return true;
}

Vec vec_zero(int rank) { return Vec(rank); }

Vec vec_basis(const Ring& ring, int rank, int i) {
  Vec v(rank);
  v[i] = poly_one(ring);
  return v;
}

Vec vec_add(const Ring& ring, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = poly_add(ring, a[i], b[i]);
  return r;
}

Vec vec_sub(const Ring& ring, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = poly_sub(ring, a[i], b[i]);
  return r;
}

Vec vec_scale(const Ring& ring, const Coeff& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = poly_scale(ring, c, a[i]);
  return r;
}

Vec vec_scale_poly(const Ring& ring, const Poly& f, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = poly_mul(ring, f, a[i]);
  return r;
}

Vec vec_axpy(const Ring& ring, const Vec& a, const Coeff& c, const Monomial& m,
             const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = poly_axpy(ring, a[i], c, m, b[i]);
  return r;
}

bool vec_eq(const Ring& ring, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!poly_eq(ring, a[i], b[i])) return false;
  return true;
}

ModTerm vec_lead(const Vec& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return {int(i), v[i].lm(), v[i].lc()};
  fail(Errc::internal, "lead of zero vector");
}

namespace {

// POT compare: +1 when (p1, m1) > (p2, m2).
int mod_term_cmp(const MonomialOrder& ord, int p1, const Monomial& m1, int p2,
                 const Monomial& m2) {
  if (p1 != p2) return p1 < p2 ? 1 : -1;
  return ord.cmp(m1, m2);
}

Poly poly_tail(const Poly& f) {
  std::vector<Term> t(f.terms().begin() + 1, f.terms().end());
  return carrier(std::move(t));
}

Vec vec_monic(const Ring& ring, const Vec& v) {
  return vec_scale(ring, ring.field().inv(vec_lead(v).c), v);
}

}  // namespace

Vec vec_nf(const Ring& ring, const Vec& v, const std::vector<Vec>& G) {
  const auto& F = ring.field();
  Vec out(v.size());
  Vec rem = v;
  while (!vec_is_zero(rem)) {
    ModTerm t = vec_lead(rem);
    bool reduced = false;
    for (const auto& g : G) {
      if (vec_is_zero(g)) continue;
      ModTerm gl = vec_lead(g);
      if (gl.pos == t.pos && gl.m.divides(t.m)) {
        rem = vec_axpy(ring, rem, F.div(t.c, gl.c), t.m / gl.m, g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      out[t.pos] =
          poly_add(ring, out[t.pos], poly_monomial(ring, t.m, t.c));
      rem[t.pos] = poly_tail(rem[t.pos]);
    }
  }
  return out;
}

std::vector<Vec> module_gb(const Ring& ring, int rank,
                           const std::vector<Vec>& gens) {
  const auto& F = ring.field();
  const auto& ord = ring.order();
  std::vector<Vec> basis;
  for (const auto& g : gens) {
    if (int(g.size()) != rank)
      fail(Errc::internal, "module generator has wrong ambient rank");
    if (!vec_is_zero(g)) basis.push_back(vec_monic(ring, g));
  }

  std::set<std::tuple<long, int, int>> queue;
  std::set<std::pair<int, int>> pending;
  auto push_pairs = [&](int t) {
    ModTerm lt = vec_lead(basis[t]);
    for (int i = 0; i < t; ++i) {
      ModTerm li = vec_lead(basis[i]);
      if (li.pos != lt.pos) continue;
      long d = lcm(li.m, lt.m).degree();
      queue.insert({d, i, t});
      pending.insert({i, t});
    }
  };
  for (int t = 0; t < int(basis.size()); ++t) push_pairs(t);

  while (!queue.empty()) {
    auto [d, i, j] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    ModTerm li = vec_lead(basis[i]), lj = vec_lead(basis[j]);
    Monomial L = lcm(li.m, lj.m);
    bool chained = false;
    for (int k = 0; k < int(basis.size()); ++k) {
      if (k == i || k == j) continue;
      ModTerm lk = vec_lead(basis[k]);
      if (lk.pos != li.pos || !lk.m.divides(L)) continue;
      auto pik = std::minmax(i, k);
      auto pjk = std::minmax(j, k);
      if (!pending.count({pik.first, pik.second}) &&
          !pending.count({pjk.first, pjk.second})) {
        chained = true;
        break;
      }
    }
    if (chained) continue;
    Vec s = vec_axpy(ring, vec_zero(rank), F.neg(F.one()), L / li.m, basis[i]);
    s = vec_axpy(ring, s, F.one(), L / lj.m, basis[j]);
    Vec h = vec_nf(ring, s, basis);
    if (!vec_is_zero(h)) {
      basis.push_back(vec_monic(ring, h));
      push_pairs(int(basis.size()) - 1);
    }
  }

  std::vector<bool> dropped(basis.size(), false);
  for (size_t i = 0; i < basis.size(); ++i) {
    ModTerm li = vec_lead(basis[i]);
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j || dropped[j]) continue;
      ModTerm lj = vec_lead(basis[j]);
      if (lj.pos != li.pos || !lj.m.divides(li.m)) continue;
      if (!(lj.m == li.m) || j < i) {
        dropped[i] = true;
        break;
      }
    }
  }
  std::vector<Vec> minimal;
  for (size_t i = 0; i < basis.size(); ++i)
    if (!dropped[i]) minimal.push_back(basis[i]);

  std::vector<Vec> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Vec> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out.push_back(vec_nf(ring, minimal[i], others));
  }
  std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
    ModTerm la = vec_lead(a), lb = vec_lead(b);
    return mod_term_cmp(ord, la.pos, la.m, lb.pos, lb.m) > 0;
  });
  return out;
}

std::vector<Vec> syzygies(const Ring& ring, int rank,
                          const std::vector<Vec>& gens) {
  int s = int(gens.size());
  if (s == 0) return {};
  std::vector<Vec> aug;
  aug.reserve(s);
  for (int i = 0; i < s; ++i) {
    Vec w(rank + s);
    for (int a = 0; a < rank; ++a) w[a] = gens[i][a];
    w[rank + i] = poly_one(ring);
    aug.push_back(std::move(w));
  }
  std::vector<Vec> G = module_gb(ring, rank + s, aug);
  std::vector<Vec> out;
  for (const auto& g : G) {
    bool head_zero = true;
    for (int a = 0; a < rank && head_zero; ++a)
      if (!g[a].is_zero()) head_zero = false;
    if (!head_zero) continue;
    Vec tail(g.begin() + rank, g.end());
    out.push_back(std::move(tail));
  }
  return out;
}

struct ModulePresentation::Cache {
  std::optional<std::vector<Vec>> gb;
  std::optional<Ideal> ann;
  Resolution res;
  bool res_started = false;
  bool res_complete = false;
};

ModulePresentation::ModulePresentation(RingPtr ring, int rank,
                                       std::vector<Vec> rels)
    : ring_(std::move(ring)),
      rank_(rank),
      rels_(std::move(rels)),
      cache_(std::make_shared<Cache>()) {
  if (rank_ < 0) fail(Errc::malformed_input, "negative ambient rank");
  for (const auto& r : rels_)
    if (int(r.size()) != rank_)
      fail(Errc::malformed_input,
           "relation column length does not match ambient rank");
}

ModulePresentation ModulePresentation::free_module(RingPtr ring, int rank) {
  return ModulePresentation(std::move(ring), rank, {});
}

ModulePresentation ModulePresentation::cyclic(const Ideal& I) {
  std::vector<Vec> rels;
  for (const auto& g : I.gens())
    if (!g.is_zero()) rels.push_back(Vec{g});
  return ModulePresentation(I.ring(), 1, std::move(rels));
}

const std::vector<Vec>& ModulePresentation::gb() const {
  if (!cache_->gb) cache_->gb = module_gb(*ring_, rank_, rels_);
  return *cache_->gb;
}

bool ModulePresentation::is_zero_module() const {
  for (int i = 0; i < rank_; ++i)
    if (!element_is_zero(vec_basis(*ring_, rank_, i))) return false;
  return true;
}

Ideal ModulePresentation::annihilator() const {
  if (cache_->ann) return *cache_->ann;
  Ideal result(ring_, {poly_one(*ring_)});
  if (rank_ > 0) {
    bool first = true;
    for (int i = 0; i < rank_; ++i) {
      std::vector<Vec> vs{vec_basis(*ring_, rank_, i)};
      vs.insert(vs.end(), rels_.begin(), rels_.end());
      std::vector<Vec> sz = syzygies(*ring_, rank_, vs);
      std::vector<Poly> gens;
      for (const auto& v : sz)
        if (!v[0].is_zero()) gens.push_back(v[0]);
      Ideal part(ring_, std::move(gens));
      result = first ? part : intersect(result, part);
      first = false;
    }
  }
  cache_->ann = result;
  return result;
}

ExtInt ModulePresentation::support_dim() const {
  return krull_dim(annihilator());
}

ModulePresentation ModulePresentation::quotient_by(const Poly& f) const {
  std::vector<Vec> rels = rels_;
  for (int i = 0; i < rank_; ++i)
    rels.push_back(vec_scale_poly(*ring_, f, vec_basis(*ring_, rank_, i)));
  return ModulePresentation(ring_, rank_, std::move(rels));
}

ModulePresentation ModulePresentation::quotient_by_ideal(const Ideal& I) const {
  require_same_ring(ring_, I.ring(), "quotient_by_ideal");
  std::vector<Vec> rels = rels_;
  for (const auto& g : I.gens()) {
    if (g.is_zero()) continue;
    for (int i = 0; i < rank_; ++i)
      rels.push_back(vec_scale_poly(*ring_, g, vec_basis(*ring_, rank_, i)));
  }
  return ModulePresentation(ring_, rank_, std::move(rels));
}

namespace {

// Splits off unit (degree-0) entries: column operations clear the pivot row,
// then the pivot row and column are removed.  The pivot row's basis vector in
// the codomain is expressible through the others, so when `dprev` is present
// its column `r` is deleted as well; images and homology are unchanged.
void prune_stage(const Ring& ring, std::vector<Vec>& d, int& rows,
                 std::vector<Vec>* dprev) {
  const auto& F = ring.field();
  for (;;) {
    d.erase(std::remove_if(d.begin(), d.end(), vec_is_zero), d.end());
    int pc = -1, pr = -1;
    for (int c = 0; c < int(d.size()) && pc < 0; ++c)
      for (int r = 0; r < rows; ++r)
        if (!d[c][r].is_zero() && d[c][r].is_constant()) {
          pc = c;
          pr = r;
          break;
        }
    if (pc < 0) return;
    Coeff inv_a = F.inv(d[pc][pr].lc());
    for (int j = 0; j < int(d.size()); ++j) {
      if (j == pc || d[j][pr].is_zero()) continue;
      Poly lam = poly_scale(ring, inv_a, d[j][pr]);
      d[j] = vec_sub(ring, d[j], vec_scale_poly(ring, lam, d[pc]));
    }
    d.erase(d.begin() + pc);
    for (auto& col : d) col.erase(col.begin() + pr);
    if (dprev) dprev->erase(dprev->begin() + pr);
    rows -= 1;
  }
}

}  // namespace

const Resolution& ModulePresentation::resolution(int length) const {
  Cache& C = *cache_;
  if (!C.res_started) {
    C.res.ranks = {rank_};
    std::vector<Vec> d;
    for (const auto& r : rels_)
      if (!vec_is_zero(r)) d.push_back(r);
    prune_stage(*ring_, d, C.res.ranks[0], nullptr);
    if (d.empty()) {
      C.res_complete = true;
    } else {
      C.res.ranks.push_back(int(d.size()));
      C.res.diffs.push_back(std::move(d));
    }
    C.res_started = true;
  }
  while (!C.res_complete && int(C.res.diffs.size()) < length) {
    int k = int(C.res.diffs.size()) - 1;
    std::vector<Vec> next = syzygies(*ring_, C.res.ranks[k], C.res.diffs[k]);
    if (next.empty()) {
      C.res_complete = true;
      break;
    }
    prune_stage(*ring_, next, C.res.ranks[k + 1], &C.res.diffs[k]);
    if (next.empty()) {
      C.res_complete = true;
      break;
    }
    C.res.ranks.push_back(int(next.size()));
    C.res.diffs.push_back(std::move(next));
  }
  return C.res;
}

ModulePresentation ext_module(int j, const ModulePresentation& M,
                              const ModulePresentation& N) {
  require_same_ring(M.ring(), N.ring(), "ext_module");
  if (j < 0) fail(Errc::malformed_input, "negative Ext index");
  const Ring& R = *M.ring();
  const Resolution& res = M.resolution(j + 1);
  int rj = res.rank_at(j);
  int h = N.rank();
  if (rj == 0 || h == 0)
    return ModulePresentation(M.ring(), 0, {});
  int rj1 = res.rank_at(j + 1);
  auto flat = [&](int a, int i) { return a * h + i; };

  // Generators: preimage in R^(rj*h) of ker(Hom(F_j,N) -> Hom(F_j+1,N)).
  std::vector<Vec> kgens;
  if (rj1 == 0) {
    for (int a = 0; a < rj; ++a)
      for (int i = 0; i < h; ++i)
        kgens.push_back(vec_basis(R, rj * h, flat(a, i)));
  } else {
    const auto& D = res.diffs[j];
    std::vector<Vec> cols;
    for (int a = 0; a < rj; ++a) {
      for (int i = 0; i < h; ++i) {
        Vec v(rj1 * h);
        for (int b = 0; b < rj1; ++b) v[flat(b, i)] = D[b][a];
        cols.push_back(std::move(v));
      }
    }
    int nb = int(cols.size());
    for (int b = 0; b < rj1; ++b) {
      for (const auto& w : N.rels()) {
        Vec v(rj1 * h);
        for (int i = 0; i < h; ++i) v[flat(b, i)] = w[i];
        cols.push_back(std::move(v));
      }
    }
    std::vector<Vec> sz = syzygies(R, rj1 * h, cols);
    for (const auto& s : sz) {
      Vec head(s.begin(), s.begin() + nb);
      if (!vec_is_zero(head)) kgens.push_back(std::move(head));
    }
  }
  int p = int(kgens.size());
  if (p == 0) return ModulePresentation(M.ring(), 0, {});

  // Relations: combinations landing in im(Hom(F_j-1,N)) + the W-block.
  std::vector<Vec> cols2 = kgens;
  if (j > 0) {
    const auto& Dp = res.diffs[j - 1];
    int rjm1 = res.rank_at(j - 1);
    for (int ap = 0; ap < rjm1; ++ap) {
      for (int i = 0; i < h; ++i) {
        Vec v(rj * h);
        for (int a = 0; a < rj; ++a) v[flat(a, i)] = Dp[a][ap];
        cols2.push_back(std::move(v));
      }
    }
  }
  for (int a = 0; a < rj; ++a) {
    for (const auto& w : N.rels()) {
      Vec v(rj * h);
      for (int i = 0; i < h; ++i) v[flat(a, i)] = w[i];
      cols2.push_back(std::move(v));
    }
  }
  std::vector<Vec> sz2 = syzygies(R, rj * h, cols2);
  std::vector<Vec> rels;
  for (const auto& s : sz2) {
    Vec head(s.begin(), s.begin() + p);
    if (!vec_is_zero(head)) rels.push_back(std::move(head));
  }
  return ModulePresentation(M.ring(), p, std::move(rels));
}

bool is_torsion_by(const ModulePresentation& N, const Ideal& I) {
  require_same_ring(N.ring(), I.ring(), "is_torsion_by");
  Ideal A = N.annihilator();
  for (const auto& g : I.gens())
    if (!radical_membership(A, g)) return false;
  return true;
}

}  // namespace lch
