// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#include "graded.hpp"

#include <algorithm>

#include "error.hpp"
#include <map>
#include <numeric>
#include <utility>

namespace lch {

long graded_degree(const GradedAlgebraSpec& A, const Monomial& mono) {
  int nv = A.base->nvars();
  long d = 0;
  for (int i = 0; i < A.m; ++i) d += mono[nv + i];
  return d;
}

std::optional<long> graded_homogeneous_degree(const GradedAlgebraSpec& A,
                                              const Poly& f) {
  if (f.is_zero()) return std::nullopt;
  long d = graded_degree(A, f.terms()[0].m);
  for (const auto& t : f.terms())
    if (graded_degree(A, t.m) != d) return std::nullopt;
  return d;
}

GradedAlgebraSpec free_graded_algebra(const RingPtr& base,
                                      const std::vector<std::string>& names) {
  std::vector<std::string> vars = base->vars();
  for (const auto& nm : names) {
    if (nm.empty())
      fail(Errc::malformed_input, "empty graded generator name");
    if (std::find(vars.begin(), vars.end(), nm) != vars.end())
      fail(Errc::malformed_input,
           "graded generator name collides with an existing variable: " + nm);
    vars.push_back(nm);
  }
  GradedAlgebraSpec A;
  A.base = base;
  A.m = int(names.size());
  A.ext = names.empty()
              ? base
              : make_derived_ring(base, std::move(vars),
                                  MonomialOrder::grevlex());
  return A;
}

namespace {

void check_algebra(const GradedAlgebraSpec& A) {
  if (!A.base || !A.ext)
    fail(Errc::malformed_input, "graded algebra without ring contexts");
  if (A.m < 0 || A.ext->nvars() != A.base->nvars() + A.m)
    fail(Errc::malformed_input,
         "graded block size disagrees with the extended ring");
  for (int i = 0; i < A.base->nvars(); ++i)
    if (A.ext->vars()[size_t(i)] != A.base->vars()[size_t(i)])
      fail(Errc::malformed_input,
           "extended ring must start with the base variables");
  for (const auto& f : A.relations) {
    auto d = graded_homogeneous_degree(A, f);
    if (!d || *d < 1)
      fail(Errc::malformed_input,
           "algebra relations must be homogeneous of positive degree");
  }
}

}  // namespace

GradedModulePresentation::GradedModulePresentation(GradedAlgebraSpec algebra,
                                                   std::vector<long> gen_degrees,
                                                   std::vector<Vec> rel_cols)
    : algebra_(std::move(algebra)), gen_degrees_(std::move(gen_degrees)) {
  check_algebra(algebra_);
  for (long d : gen_degrees_)
    if (d < 0)
      fail(Errc::malformed_input, "generator degrees must be nonnegative");
  for (auto& col : rel_cols) {
    if (col.size() != gen_degrees_.size())
      fail(Errc::malformed_input,
           "relation column length disagrees with the generator count");
    std::optional<long> deg;
    for (size_t j = 0; j < col.size(); ++j) {
      if (col[j].is_zero()) continue;
      auto d = graded_homogeneous_degree(algebra_, col[j]);
      if (!d)
        fail(Errc::malformed_input, "relation entry mixes graded degrees");
      long nc = *d + gen_degrees_[j];
      if (deg && *deg != nc)
        fail(Errc::malformed_input, "relation column is not homogeneous");
      deg = nc;
    }
    if (!deg) continue;  // zero column carries no constraint
    rel_cols_.push_back(std::move(col));
    col_degrees_.push_back(*deg);
  }
}

GradedModulePresentation graded_direct_sum(const GradedModulePresentation& a,
                                           const GradedModulePresentation& b) {
  require_same_ring(a.algebra().base, b.algebra().base, "graded_direct_sum");
  require_same_ring(a.algebra().ext, b.algebra().ext, "graded_direct_sum");
  const auto& ra = a.algebra().relations;
  const auto& rb = b.algebra().relations;
  if (a.algebra().m != b.algebra().m || ra.size() != rb.size())
    fail(Errc::context_mismatch, "graded_direct_sum: algebras differ");
  for (size_t i = 0; i < ra.size(); ++i)
    if (!poly_eq(*a.algebra().ext, ra[i], rb[i]))
      fail(Errc::context_mismatch, "graded_direct_sum: algebras differ");

  size_t na = a.gen_degrees().size();
  size_t nb = b.gen_degrees().size();
  std::vector<long> degs = a.gen_degrees();
  degs.insert(degs.end(), b.gen_degrees().begin(), b.gen_degrees().end());
  std::vector<Vec> cols;
  for (const auto& c : a.rel_cols()) {
    Vec v = c;
    v.resize(na + nb, poly_zero());
    cols.push_back(std::move(v));
  }
  for (const auto& c : b.rel_cols()) {
    Vec v(na, poly_zero());
    v.insert(v.end(), c.begin(), c.end());
    cols.push_back(std::move(v));
  }
  return GradedModulePresentation(a.algebra(), std::move(degs),
                                  std::move(cols));
}

namespace {

void tuples_rec(int pos, int m, long rem, std::vector<int32_t>& cur,
                std::vector<std::vector<int32_t>>& out) {
  if (pos == m - 1) {
    cur[size_t(pos)] = int32_t(rem);
    out.push_back(cur);
    cur[size_t(pos)] = 0;
    return;
  }
  for (long e = rem; e >= 0; --e) {
    cur[size_t(pos)] = int32_t(e);
    tuples_rec(pos + 1, m, rem - e, cur, out);
  }
  cur[size_t(pos)] = 0;
}

// Exponent tuples of the graded block with entry sum d, first entry
// varying slowest from d down to 0.
std::vector<std::vector<int32_t>> graded_monomials(int m, long d) {
  std::vector<std::vector<int32_t>> out;
  if (d < 0) return out;
  if (m == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  std::vector<int32_t> cur(size_t(m), 0);
  tuples_rec(0, m, d, cur, out);
  return out;
}

}  // namespace

ModulePresentation graded_component(const GradedModulePresentation& N,
                                    long n) {
  if (n < 0) fail(Errc::malformed_input, "component degree must be nonnegative");
  const GradedAlgebraSpec& A = N.algebra();
  const RingPtr& base = A.base;
  int nv = base->nvars();
  int g = int(N.gen_degrees().size());

  std::map<std::pair<int, std::vector<int32_t>>, int> index;
  int rank = 0;
  for (int i = 0; i < g; ++i)
    for (auto& beta : graded_monomials(A.m, n - N.gen_degrees()[size_t(i)]))
      index[{i, beta}] = rank++;

  std::vector<Vec> rels;
  auto add_relation = [&](const Vec& col, const std::vector<int32_t>& beta) {
    auto acc = std::vector<std::vector<Term>>(size_t(rank));
    for (int j = 0; j < int(col.size()); ++j) {
      for (const auto& t : col[size_t(j)].terms()) {
        Monomial xm(nv);
        for (int v = 0; v < nv; ++v) xm[v] = t.m[v];
        std::vector<int32_t> gm(size_t(A.m));
        for (int v = 0; v < A.m; ++v)
          gm[size_t(v)] = t.m[nv + v] + beta[size_t(v)];
        auto it = index.find({j, gm});
        if (it == index.end())
          fail(Errc::internal, "graded term missed the component basis");
        acc[size_t(it->second)].push_back(Term{xm, t.c});
      }
    }
    Vec v;
    v.reserve(size_t(rank));
    for (auto& ts : acc) v.push_back(Poly::from_terms(*base, std::move(ts)));
    if (!vec_is_zero(v)) rels.push_back(std::move(v));
  };

  for (size_t c = 0; c < N.rel_cols().size(); ++c)
    for (auto& beta : graded_monomials(A.m, n - N.col_degrees()[c]))
      add_relation(N.rel_cols()[c], beta);
  for (const auto& f : A.relations) {
    long e = *graded_homogeneous_degree(A, f);
    for (int j = 0; j < g; ++j) {
      Vec col(size_t(g), poly_zero());
      col[size_t(j)] = f;
      for (auto& beta :
           graded_monomials(A.m, n - e - N.gen_degrees()[size_t(j)]))
        add_relation(col, beta);
    }
  }
  return ModulePresentation(base, rank, std::move(rels));
}

GradedModulePresentation make_family(FamilyKind kind, const Ideal& I,
                                     const ModulePresentation& M) {
  require_same_ring(I.ring(), M.ring(), "make_family");
  const RingPtr& R = I.ring();
  if (M.rank() != 1)
    fail(Errc::unsupported_input,
         "blowup families need a cyclic coefficient module");
  std::vector<Poly> Jgens;
  for (const auto& rel : M.rels())
    if (!rel[0].is_zero()) Jgens.push_back(rel[0]);

  const auto& as = I.gens();
  int s = int(as.size());
  int nv = R->nvars();

  std::vector<std::string> names;
  {
    std::vector<std::string> taken = R->vars();
    for (int i = 0; i < s; ++i) {
      std::string stem = s <= 3 ? std::string(1, "uvw"[size_t(i)])
                                : "y" + std::to_string(i + 1);
      std::string nm = stem;
      int suffix = 0;
      while (std::find(taken.begin(), taken.end(), nm) != taken.end())
        nm = stem + std::to_string(++suffix);
      names.push_back(nm);
      taken.push_back(nm);
    }
  }
  GradedAlgebraSpec A = free_graded_algebra(R, names);

  if (s == 0) {
    // Zero ideal: the whole family lives in degree zero.
    std::vector<Vec> cols;
    for (const auto& f : Jgens) cols.push_back({f});
    return GradedModulePresentation(std::move(A), {0}, std::move(cols));
  }

  // Both kernels come from eliminating t over field[t, x.., y..] with t in
  // its own dominant block.  For a cyclic coefficient module the graph
  // ideal needs no saturation.
  std::string tname = "t";
  {
    int suffix = 0;
    while (A.ext->var_index(tname) >= 0)
      tname = "t" + std::to_string(++suffix);
  }
  std::vector<std::string> bigvars{tname};
  bigvars.insert(bigvars.end(), A.ext->vars().begin(), A.ext->vars().end());
  RingPtr big =
      make_derived_ring(R, std::move(bigvars), MonomialOrder::block_elim(1));

  auto base_to_big = std::vector<int>(size_t(nv));
  std::iota(base_to_big.begin(), base_to_big.end(), 1);
  auto lift = [&](const Poly& f) { return poly_map(*R, *big, base_to_big, f); };

  Poly t = poly_var(*big, 0);
  std::vector<Poly> graph;
  for (int i = 0; i < s; ++i) {
    Poly yi = poly_var(*big, 1 + nv + i);
    graph.push_back(
        poly_sub(*big, yi, poly_mul(*big, lift(as[size_t(i)]), t)));
  }
  std::vector<Poly> graph_mod = graph;
  for (const auto& f : Jgens) graph_mod.push_back(lift(f));

  std::vector<int> big_to_ext(size_t(big->nvars()));
  big_to_ext[0] = -1;
  for (int i = 1; i < big->nvars(); ++i) big_to_ext[size_t(i)] = i - 1;
  auto drop_t = [&](const std::vector<Poly>& fs) {
    std::vector<Poly> out;
    for (const auto& f : fs)
      out.push_back(poly_map(*big, *A.ext, big_to_ext, f));
    return out;
  };

  A.relations = drop_t(eliminate_raw(*big, graph, 1));
  // With no coefficient relations the module kernel equals the algebra
  // kernel, which is already implied.
  std::vector<Poly> KJ;
  if (!Jgens.empty()) KJ = drop_t(eliminate_raw(*big, graph_mod, 1));

  std::vector<Vec> cols;
  for (const auto& f : KJ) cols.push_back({f});
  if (kind == FamilyKind::assoc_graded) {
    auto base_to_ext = std::vector<int>(size_t(nv));
    std::iota(base_to_ext.begin(), base_to_ext.end(), 0);
    for (const auto& a : as)
      cols.push_back({poly_map(*R, *A.ext, base_to_ext, a)});
  }
  return GradedModulePresentation(std::move(A), {0}, std::move(cols));
}

namespace {

void check_range(long n_lo, long n_hi, long window) {
  if (n_lo < 0 || n_hi < n_lo)
    fail(Errc::malformed_input, "empty or negative sample range");
  if (window < 2)
    fail(Errc::malformed_input, "stability window must be at least 2");
}

// onset = least sampled n whose value never changes afterwards; the
// verdict needs the last `window` samples to agree.
void finalize(StabilizationReport& rep) {
  size_t cnt = rep.values.size();
  size_t idx = cnt;
  while (idx > 0 && rep.values[idx - 1] == rep.values[cnt - 1]) --idx;
  rep.onset = rep.n_lo + long(idx);
  rep.stable_in_window =
      long(cnt) >= rep.window && long(cnt - idx) >= rep.window;
  rep.stable_value = rep.stable_in_window ? rep.values[cnt - 1] : "";
}

}  // namespace

StabilizationReport stabilize_ass(const GradedModulePresentation& N,
                                  long n_lo, long n_hi, long window,
                                  uint64_t seed) {
  check_range(n_lo, n_hi, window);
  StabilizationReport rep;
  rep.quantity = "ass";
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  rep.window = window;
  for (long n = n_lo; n <= n_hi; ++n) {
    AssSet a = associated_primes(graded_component(N, n), seed);
    rep.values.push_back(assset_brief(a));
    rep.sets.push_back(std::move(a));
  }
  finalize(rep);
  return rep;
}

StabilizationReport stabilize_depth_k(const GradedModulePresentation& N,
                                      const Ideal& I, long k, long n_lo,
                                      long n_hi, long window, uint64_t seed) {
  check_range(n_lo, n_hi, window);
  require_same_ring(I.ring(), N.algebra().base, "stabilize_depth_k");
  StabilizationReport rep;
  rep.quantity = "depthk";
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  rep.window = window;
  for (long n = n_lo; n <= n_hi; ++n) {
    DepthResult d = depth_k(I, graded_component(N, n), k, seed);
    rep.values.push_back(d.depth.str());
    rep.depths.push_back(d.depth);
  }
  finalize(rep);
  return rep;
}

CommonSequenceResult common_sequence(const GradedModulePresentation& N,
                                     const Ideal& I, long k, long n_lo,
                                     long n_hi, long window, uint64_t seed) {
  StabilizationReport dep =
      stabilize_depth_k(N, I, k, n_lo, n_hi, window, seed);
  if (!dep.stable_in_window)
    fail(Errc::inconclusive, "depth did not settle inside the window");

  CommonSequenceResult res;
  res.eventual_depth = dep.depths.back();
  res.tail_from = dep.onset;
  long len = res.eventual_depth.is_finite() ? res.eventual_depth.value()
                                            : N.algebra().base->nvars();

  Rng rng(seed ^ fnv1a64(ideal_key(I)), "common-sequence");
  std::vector<ModulePresentation> tail;
  for (long n = dep.onset; n <= n_hi; ++n)
    tail.push_back(graded_component(N, n));
  while (long(res.xs.size()) < len) {
    std::vector<Ideal> bad;
    std::vector<std::string> seen;
    for (const auto& Mn : tail) {
      AssSet ass = associated_primes(Mn, seed);
      for (const auto& p : ass.items()) {
        if (p.dim <= k) continue;
        std::string key = ideal_key(p.ideal);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
        bad.push_back(p.ideal);
      }
    }
    Poly x = avoid_primes(I, bad, rng);
    res.xs.push_back(x);
    for (auto& Mn : tail) Mn = Mn.quotient_by(x);
  }
  for (long n = n_lo; n <= n_hi; ++n) {
    res.ns.push_back(n);
    res.fail_index.push_back(
        dim_sequence_fail_index(res.xs, graded_component(N, n), k, seed));
  }
  return res;
}

TheoremStabilization stabilize_theorem_sets(const GradedModulePresentation& GN,
                                            const Ideal& I,
                                            const ModulePresentation& M,
                                            long k, long l, long n_lo,
                                            long n_hi, long window,
                                            uint64_t seed) {
  check_range(n_lo, n_hi, window);
  require_same_ring(I.ring(), GN.algebra().base, "stabilize_theorem_sets");
  require_same_ring(I.ring(), M.ring(), "stabilize_theorem_sets");
  TheoremStabilization out;
  StabilizationReport& rep = out.report;
  rep.quantity = "asslch";
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  rep.window = window;
  for (long n = n_lo; n <= n_hi; ++n) {
    ModulePresentation Nn = graded_component(GN, n);
    bool declined = false;
    try {
      TheoremSetResult r = ass_lch_formula(I, M, Nn, k, l, seed);
      rep.values.push_back(assset_brief(r.union_set));
      rep.sets.push_back(r.union_set);
      out.status.push_back(r.guaranteed ? 0 : 1);
    } catch (const Error& e) {
      if (e.code() != Errc::exceeds_depth) throw;
      rep.values.push_back("declined");
      rep.sets.push_back(AssSet{});
      out.status.push_back(2);
      declined = true;
    }
    if (declined) {
      out.oracle_match.push_back(-1);
      continue;
    }
    int match = -1;
    try {
      AssSet oracle = ext_ass_sets(I, Nn, k, l, 1, seed);
      match = rep.sets.back().set_equals(oracle) ? 1 : 0;
    } catch (const Error&) {
      match = -1;
    }
    out.oracle_match.push_back(match);
  }
  finalize(rep);
  return out;
}

}  // namespace lch
