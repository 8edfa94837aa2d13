// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#include "dimdepth.hpp"

#include "error.hpp"

namespace lch {

AssSet filter_dim_ge(const AssSet& s, long k) {
  AssSet out;
  for (const auto& p : s.items())
    if (p.dim >= k) out.insert(p);
  return out;
}

bool is_zerodivisor(const Poly& x, const ModulePresentation& M) {
  const Ring& R = *M.ring();
  int r = M.rank();
  if (r == 0) return false;
  std::vector<Vec> cols;
  for (int i = 0; i < r; ++i)
    cols.push_back(vec_scale_poly(R, x, vec_basis(R, r, i)));
  for (const auto& rel : M.rels()) cols.push_back(rel);
  for (const auto& s : syzygies(R, r, cols)) {
    Vec v(s.begin(), s.begin() + r);
    if (!M.element_is_zero(v)) return true;
  }
  return false;
}

long regular_sequence_fail_index(const std::vector<Poly>& xs,
                                 const ModulePresentation& N) {
  ModulePresentation M = N;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (is_zerodivisor(xs[i], M)) return long(i) + 1;
    M = M.quotient_by(xs[i]);
  }
  return 0;
}

long dim_sequence_fail_index(const std::vector<Poly>& xs,
                             const ModulePresentation& N, long k,
                             uint64_t seed) {
  const Ring& R = *N.ring();
  for (const auto& x : xs)
    if (!R.field().is_zero(poly_constant_term(R, x)))
      fail(Errc::not_local, "sequence element has a nonzero constant term");
  ModulePresentation M = N;
  for (size_t i = 0; i < xs.size(); ++i) {
    AssSet ass = associated_primes(M, seed);
    for (const auto& p : ass.items())
      if (p.dim > k && p.ideal.contains(xs[i])) return long(i) + 1;
    M = M.quotient_by(xs[i]);
  }
  return 0;
}

Poly avoid_primes(const Ideal& I, const std::vector<Ideal>& primes, Rng& rng) {
  const RingPtr& R = I.ring();
  const CoeffField& F = R->field();
  const auto& G = I.gb();
  if (G.empty()) fail(Errc::internal, "avoidance inside the zero ideal");
  for (const auto& p : primes)
    if (p.contains_ideal(I))
      fail(Errc::no_avoider, "the ideal lies inside one of the listed primes");
  auto ok = [&](const Poly& x) {
    if (x.is_zero()) return false;
    for (const auto& p : primes)
      if (p.contains(x)) return false;
    return true;
  };

  for (const auto& g : G)
    if (ok(g)) return g;

  Poly sum = poly_zero();
  for (const auto& g : G) sum = poly_add(*R, sum, g);
  if (ok(sum)) return sum;

  for (int round = 0; round < 16; ++round) {
    Poly x = poly_zero();
    for (const auto& g : G)
      x = poly_add(*R, x, poly_scale(*R, F.from_int(int64_t(rng.below(10))), g));
    if (ok(x)) return x;
  }

  for (int round = 0; round < 16; ++round) {
    Poly x = poly_zero();
    for (const auto& g : G) {
      Monomial m(R->nvars());
      for (int i = 0; i < R->nvars(); ++i) m[i] = int32_t(rng.below(2));
      Coeff c = F.from_int(int64_t(rng.below(10)));
      x = poly_add(*R, x, poly_scale_term(*R, c, m, g));
    }
    if (ok(x)) return x;
  }

  int64_t p = F.characteristic();
  uint64_t width = p > 0 ? uint64_t(p) : 100000;
  for (int round = 0; round < 32; ++round) {
    Poly x = poly_zero();
    for (const auto& g : G)
      x = poly_add(*R, x,
                   poly_scale(*R, F.from_int(int64_t(rng.below(width))), g));
    if (ok(x)) return x;
  }
  fail(Errc::field_too_small,
       "could not find an element avoiding the listed primes");
}

Ideal ideal_IM(const Ideal& I, const ModulePresentation& M) {
  require_same_ring(I.ring(), M.ring(), "ideal_IM");
  return M.quotient_by_ideal(I).annihilator();
}

DepthResult depth_k(const Ideal& I, const ModulePresentation& N, long k,
                    uint64_t seed) {
  require_same_ring(I.ring(), N.ring(), "depth_k");
  const RingPtr& R = I.ring();
  for (const auto& g : I.gb())
    if (!R->field().is_zero(poly_constant_term(*R, g)))
      fail(Errc::not_local, "depth needs an ideal inside the maximal ideal");
  Rng rng(seed ^ fnv1a64(ideal_key(I)), "depth-avoid");

  if (krull_dim(ideal_IM(I, N)) <= ExtInt(k))
    return {ExtInt::infinity(), {}};

  ModulePresentation M = N;
  std::vector<Poly> witness;
  long guard = 2 * R->nvars() + 2;
  for (long step = 0; step < guard; ++step) {
    AssSet ass = associated_primes(M, seed);
    std::vector<Ideal> bad;
    for (const auto& p : ass.items())
      if (p.dim > k) bad.push_back(p.ideal);
    for (const auto& p : bad)
      if (p.contains_ideal(I)) return {ExtInt(step), witness};
    Poly x = avoid_primes(I, bad, rng);
    witness.push_back(x);
    M = M.quotient_by(x);
  }
  fail(Errc::internal, "depth iteration did not terminate");
}

ExtInt depth_k_ext_oracle(const Ideal& I, const ModulePresentation& N,
                          long k) {
  require_same_ring(I.ring(), N.ring(), "depth_k_ext_oracle");
  const RingPtr& R = I.ring();
  Ideal a = ideal_IM(I, N);
  auto SI = ModulePresentation::cyclic(I);
  for (int j = 0; j <= R->nvars(); ++j) {
    auto E = ext_module(j, SI, N);
    if (E.is_zero_module()) continue;
    Ideal sum = ideal_sum(E.annihilator(), a);
    if (krull_dim(sum) >= ExtInt(k + 1)) return ExtInt(j);
  }
  return ExtInt::infinity();
}

}  // namespace lch
