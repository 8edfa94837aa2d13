// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#include "groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "error.hpp"

namespace lch {
namespace {

Poly poly_tail(const Poly& f) {
  std::vector<Term> t(f.terms().begin() + 1, f.terms().end());
  return carrier(std::move(t));
}

long support_mask(const Monomial& m) {
  long mask = 0;
  for (int i = 0; i < m.nvars(); ++i)
    if (m[i] > 0) mask |= (1L << i);
  return mask;
}

}  // namespace

Poly normal_form(const Ring& ring, const Poly& f, const std::vector<Poly>& G) {
  const auto& F = ring.field();
  std::vector<Term> out;
  Poly rem = f;
  while (!rem.is_zero()) {
    bool reduced = false;
    for (const auto& g : G) {
      if (g.is_zero()) continue;
      if (g.lm().divides(rem.lm())) {
        rem = poly_axpy(ring, rem, F.div(rem.lc(), g.lc()), rem.lm() / g.lm(),
                        g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      out.push_back(rem.lt());
      rem = poly_tail(rem);
    }
  }
  return carrier(std::move(out));
}

std::vector<Poly> buchberger(const Ring& ring, std::vector<Poly> gens) {
  const auto& F = ring.field();
  const auto& ord = ring.order();

  std::vector<Poly> basis;
  for (auto& g : gens) {
    if (!g.is_zero()) basis.push_back(poly_monic(ring, g));
  }

  // Pending S-pairs keyed by (lcm degree, i, j) for a deterministic strategy.
  std::set<std::tuple<long, int, int>> queue;
  std::set<std::pair<int, int>> pending;
  auto push_pairs = [&](int t) {
    for (int i = 0; i < t; ++i) {
      long d = lcm(basis[i].lm(), basis[t].lm()).degree();
      queue.insert({d, i, t});
      pending.insert({i, t});
    }
  };
  for (int t = 0; t < int(basis.size()); ++t) push_pairs(t);

  while (!queue.empty()) {
    auto [d, i, j] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    const Monomial &li = basis[i].lm(), &lj = basis[j].lm();
    if (coprime(li, lj)) continue;
    Monomial L = lcm(li, lj);
    bool chained = false;
    for (int k = 0; k < int(basis.size()); ++k) {
      if (k == i || k == j) continue;
      if (!basis[k].lm().divides(L)) continue;
      auto pik = std::minmax(i, k);
      auto pjk = std::minmax(j, k);
      if (!pending.count({pik.first, pik.second}) &&
          !pending.count({pjk.first, pjk.second})) {
        chained = true;
        break;
      }
    }
    if (chained) continue;
    Poly s = poly_scale_term(ring, F.one(), L / li, basis[i]);
    s = poly_axpy(ring, s, F.one(), L / lj, basis[j]);
    Poly h = normal_form(ring, s, basis);
    if (!h.is_zero()) {
      basis.push_back(poly_monic(ring, h));
      push_pairs(int(basis.size()) - 1);
    }
  }

  // Minimalize, then tail-reduce, then sort for canonical output.
  std::vector<bool> dropped(basis.size(), false);
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j || dropped[j]) continue;
      if (basis[j].lm().divides(basis[i].lm())) {
        if (!(basis[j].lm() == basis[i].lm()) || j < i) {
          dropped[i] = true;
          break;
        }
      }
    }
  }
  std::vector<Poly> minimal;
  for (size_t i = 0; i < basis.size(); ++i)
    if (!dropped[i]) minimal.push_back(basis[i]);

  std::vector<Poly> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out.push_back(normal_form(ring, minimal[i], others));
  }
  std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
    return ord.cmp(a.lm(), b.lm()) > 0;
  });
  return out;
}

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {}

Ideal Ideal::with_gb(RingPtr ring, std::vector<Poly> gb) {
  Ideal I(std::move(ring), gb);
  I.gb_ = std::make_shared<std::vector<Poly>>(std::move(gb));
  return I;
}

const std::vector<Poly>& Ideal::gb() const {
  if (!gb_)
    gb_ = std::make_shared<std::vector<Poly>>(buchberger(*ring_, gens_));
  return *gb_;
}

bool Ideal::is_unit() const {
  const auto& G = gb();
  return G.size() == 1 && G[0].is_constant() && !G[0].is_zero();
}

bool Ideal::contains_ideal(const Ideal& other) const {
  require_same_ring(ring_, other.ring_, "contains_ideal");
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

bool Ideal::equals(const Ideal& other) const {
  require_same_ring(ring_, other.ring_, "equals");
  const auto &a = gb(), &b = other.gb();
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!poly_eq(*ring_, a[i], b[i])) return false;
  return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal_sum");
  std::vector<Poly> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal_product");
  std::vector<Poly> gens;
  for (const auto& f : a.gens())
    for (const auto& g : b.gens())
      gens.push_back(poly_mul(*a.ring(), f, g));
  return Ideal(a.ring(), std::move(gens));
}

namespace {

void power_products(const Ring& ring, const std::vector<Poly>& gens, long t,
                    size_t from, const Poly& acc, std::vector<Poly>& out) {
  if (t == 0) {
    out.push_back(acc);
    return;
  }
  for (size_t i = from; i < gens.size(); ++i)
    power_products(ring, gens, t - 1, i, poly_mul(ring, acc, gens[i]), out);
}

}  // namespace

Ideal ideal_power(const Ideal& a, long t) {
  if (t < 0) fail(Errc::malformed_input, "negative ideal power");
  const Ring& R = *a.ring();
  if (t == 0) return Ideal(a.ring(), {poly_one(R)});
  std::vector<Poly> gens;
  power_products(R, a.gens(), t, 0, poly_one(R), gens);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_generator_powers(const Ideal& a, const std::vector<long>& ts) {
  if (ts.size() != a.gens().size())
    fail(Errc::malformed_input,
         "generator power tuple length does not match generator count");
  const Ring& R = *a.ring();
  std::vector<Poly> gens;
  for (size_t i = 0; i < ts.size(); ++i) {
    if (ts[i] < 1) fail(Errc::malformed_input, "generator powers must be >= 1");
    gens.push_back(poly_pow(R, a.gens()[i], ts[i]));
  }
  return Ideal(a.ring(), std::move(gens));
}

std::vector<Poly> eliminate_raw(const Ring& ext, const std::vector<Poly>& gens,
                                int ndrop) {
  std::vector<Poly> G = buchberger(ext, gens);
  std::vector<Poly> out;
  for (const auto& g : G) {
    bool free = true;
    for (const auto& t : g.terms()) {
      for (int i = 0; i < ndrop && free; ++i)
        if (t.m[i] > 0) free = false;
      if (!free) break;
    }
    if (free) out.push_back(g);
  }
  return out;
}

Ideal eliminate(const Ideal& I, const std::vector<int>& drop_vars) {
  const Ring& R = *I.ring();
  int n = R.nvars();
  std::vector<bool> drop(n, false);
  for (int v : drop_vars) {
    if (v < 0 || v >= n) fail(Errc::malformed_input, "bad variable index");
    drop[v] = true;
  }
  int ndrop = int(drop_vars.size());
  if (ndrop == 0 || ndrop >= n)
    fail(Errc::malformed_input, "eliminate needs a proper nonempty subset");

  std::vector<std::string> ext_vars;
  std::vector<int> to_ext(n, -1);
  for (int i = 0; i < n; ++i)
    if (drop[i]) {
      to_ext[i] = int(ext_vars.size());
      ext_vars.push_back(R.vars()[i]);
    }
  std::vector<std::string> kept_names;
  std::vector<int> ext_to_res;
  ext_to_res.resize(n, -1);
  for (int i = 0; i < n; ++i)
    if (!drop[i]) {
      to_ext[i] = int(ext_vars.size());
      ext_to_res[int(ext_vars.size())] = int(kept_names.size());
      ext_vars.push_back(R.vars()[i]);
      kept_names.push_back(R.vars()[i]);
    }
  RingPtr ext = make_derived_ring(I.ring(), ext_vars,
                                  MonomialOrder::block_elim(ndrop));
  std::vector<Poly> mapped;
  for (const auto& g : I.gens()) mapped.push_back(poly_map(R, *ext, to_ext, g));
  std::vector<Poly> raw = eliminate_raw(*ext, mapped, ndrop);

  RingPtr res = make_derived_ring(I.ring(), kept_names,
                                  MonomialOrder::grevlex());
  std::vector<Poly> out;
  for (const auto& g : raw) out.push_back(poly_map(*ext, *res, ext_to_res, g));
  return Ideal::with_gb(res, std::move(out));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "intersect");
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  const Ring& R = *a.ring();
  int n = R.nvars();
  std::vector<std::string> ext_vars{fresh_var_name(R, "t")};
  for (const auto& v : R.vars()) ext_vars.push_back(v);
  RingPtr ext =
      make_derived_ring(a.ring(), ext_vars, MonomialOrder::block_elim(1));
  std::vector<int> to_ext(n);
  for (int i = 0; i < n; ++i) to_ext[i] = i + 1;
  Poly t = poly_var(*ext, 0);
  Poly one_minus_t = poly_sub(*ext, poly_one(*ext), t);
  std::vector<Poly> gens;
  for (const auto& f : a.gens())
    gens.push_back(poly_mul(*ext, t, poly_map(R, *ext, to_ext, f)));
  for (const auto& g : b.gens())
    gens.push_back(poly_mul(*ext, one_minus_t, poly_map(R, *ext, to_ext, g)));
  std::vector<Poly> raw = eliminate_raw(*ext, gens, 1);
  std::vector<int> back(ext->nvars(), -1);
  for (int i = 0; i < n; ++i) back[i + 1] = i;
  std::vector<Poly> out;
  for (const auto& g : raw) out.push_back(poly_map(*ext, R, back, g));
  return Ideal::with_gb(a.ring(), std::move(out));
}

Ideal colon(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "colon");
  const Ring& R = *I.ring();
  std::vector<Poly> nz;
  for (const auto& g : J.gens())
    if (!g.is_zero()) nz.push_back(g);
  if (nz.empty()) return Ideal(I.ring(), {poly_one(R)});
  bool first = true;
  Ideal acc(I.ring(), {});
  for (const auto& g : nz) {
    Ideal Ig = intersect(I, Ideal(I.ring(), {g}));
    std::vector<Poly> qs;
    for (const auto& h : Ig.gb()) {
      auto q = poly_exact_div(R, h, g);
      if (!q)
        fail(Errc::internal, "colon: intersection element not divisible");
      qs.push_back(*q);
    }
    Ideal part(I.ring(), std::move(qs));
    acc = first ? part : intersect(acc, part);
    first = false;
  }
  return acc;
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  Ideal cur = I;
  for (int iter = 0; iter < 1000; ++iter) {
    Ideal next = colon(cur, J);
    if (next.equals(cur)) return cur;
    cur = next;
  }
  fail(Errc::internal, "saturation did not stabilize");
}

bool radical_membership(const Ideal& I, const Poly& f) {
  if (f.is_zero()) return true;
  if (I.is_unit()) return true;
  const Ring& R = *I.ring();
  int n = R.nvars();
  std::vector<std::string> ext_vars{fresh_var_name(R, "t")};
  for (const auto& v : R.vars()) ext_vars.push_back(v);
  RingPtr ext =
      make_derived_ring(I.ring(), ext_vars, MonomialOrder::grevlex());
  std::vector<int> to_ext(n);
  for (int i = 0; i < n; ++i) to_ext[i] = i + 1;
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) gens.push_back(poly_map(R, *ext, to_ext, g));
  Poly tf = poly_mul(*ext, poly_var(*ext, 0), poly_map(R, *ext, to_ext, f));
  gens.push_back(poly_sub(*ext, poly_one(*ext), tf));
  std::vector<Poly> G = buchberger(*ext, gens);
  return G.size() == 1 && G[0].is_constant();
}

namespace {

std::vector<long> lt_masks(const Ideal& I) {
  std::vector<long> masks;
  for (const auto& g : I.gb()) masks.push_back(support_mask(g.lm()));
  return masks;
}

bool mask_independent(const std::vector<long>& lts, long U) {
  for (long m : lts)
    if ((m & ~U) == 0) return false;
  return true;
}

}  // namespace

ExtInt krull_dim(const Ideal& I) {
  if (I.is_unit()) return ExtInt(-1);
  int n = I.ring()->nvars();
  if (n > 20) fail(Errc::internal, "too many variables for dimension search");
  auto lts = lt_masks(I);
  int best = 0;
  for (long U = 0; U < (1L << n); ++U) {
    int pc = __builtin_popcountl(U);
    if (pc <= best) continue;
    if (mask_independent(lts, U)) best = pc;
  }
  return ExtInt(best);
}

long codim(const Ideal& I) {
  ExtInt d = krull_dim(I);
  if (d == ExtInt(-1)) fail(Errc::internal, "codim of the unit ideal");
  return I.ring()->nvars() - d.value();
}

std::vector<std::vector<int>> max_independent_sets(const Ideal& I) {
  std::vector<std::vector<int>> out;
  if (I.is_unit()) return out;
  int n = I.ring()->nvars();
  auto lts = lt_masks(I);
  ExtInt d = krull_dim(I);
  for (long U = 0; U < (1L << n); ++U) {
    if (__builtin_popcountl(U) != d.value()) continue;
    if (!mask_independent(lts, U)) continue;
    std::vector<int> vars;
    for (int i = 0; i < n; ++i)
      if (U & (1L << i)) vars.push_back(i);
    out.push_back(std::move(vars));
  }
  return out;
}

std::vector<Monomial> std_monomials(const Ring& ring,
                                    const std::vector<Poly>& G, size_t cap) {
  std::vector<Monomial> lts;
  for (const auto& g : G)
    if (!g.is_zero()) lts.push_back(g.lm());
  std::set<std::vector<int32_t>> seen;
  std::vector<Monomial> queue{Monomial(ring.nvars())};
  seen.insert(queue[0].exps());
  std::vector<Monomial> out;
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.erase(queue.begin());
    bool in_lt = false;
    for (const auto& l : lts)
      if (l.divides(m)) {
        in_lt = true;
        break;
      }
    if (in_lt) continue;
    out.push_back(m);
    if (out.size() > cap)
      fail(Errc::malformed_input,
           "standard monomial basis exceeds cap (ideal not zero-dimensional?)");
    for (int i = 0; i < ring.nvars(); ++i) {
      Monomial c = m;
      c[i] += 1;
      if (seen.insert(c.exps()).second) queue.push_back(c);
    }
  }
  const auto& ord = ring.order();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) {
              return ord.cmp(a, b) < 0;
            });
  return out;
}

std::string fresh_var_name(const Ring& ring, const std::string& stem) {
  std::string name = stem;
  int k = 0;
  while (ring.var_index(name) >= 0) name = stem + std::to_string(k++);
  return name;
}

}  // namespace lch
