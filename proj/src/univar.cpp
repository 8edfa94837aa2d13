// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#include "univar.hpp"

#include <algorithm>

#include "error.hpp"

namespace lch::uv {
namespace {

int64_t mod_pos(int64_t a, int64_t p) {
  int64_t r = a % p;
  return r < 0 ? r + p : r;
}

int64_t inv_mod(int64_t a, int64_t p) {
  int64_t t = 0, nt = 1, r = p, nr = mod_pos(a, p);
  while (nr != 0) {
    int64_t q = r / nr;
    int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) fail(Errc::internal, "univariate: non-invertible element");
  return mod_pos(t, p);
}

}  // namespace

UPoly trim(UPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int deg(const UPoly& a) { return int(a.size()) - 1; }

UPoly add(int64_t p, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    int64_t s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = s >= p ? s - p : s;
  }
  return trim(std::move(r));
}

UPoly sub(int64_t p, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    int64_t s = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
    r[i] = s < 0 ? s + p : s;
  }
  return trim(std::move(r));
}

UPoly mul(int64_t p, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return trim(std::move(r));
}

UPoly scale(int64_t p, int64_t c, const UPoly& a) {
  c = mod_pos(c, p);
  UPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] * c) % p;
  return trim(std::move(r));
}

UPoly monic(int64_t p, const UPoly& a) {
  if (a.empty()) return a;
  return scale(p, inv_mod(a.back(), p), a);
}

std::pair<UPoly, UPoly> divmod(int64_t p, const UPoly& a, const UPoly& b) {
  if (b.empty()) fail(Errc::internal, "univariate division by zero");
  UPoly rem = a;
  UPoly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
  int64_t inv_lead = inv_mod(b.back(), p);
  while (deg(rem) >= deg(b)) {
    int d = deg(rem) - deg(b);
    int64_t c = (rem.back() * inv_lead) % p;
    q[d] = c;
    for (size_t i = 0; i < b.size(); ++i) {
      int64_t s = rem[i + d] - (c * b[i]) % p;
      rem[i + d] = s < 0 ? s + p : s;
    }
    rem = trim(std::move(rem));
  }
  return {trim(std::move(q)), rem};
}

UPoly gcd(int64_t p, UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = divmod(p, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(p, a);
}

UPoly powmod(int64_t p, const UPoly& base, const BigInt& e, const UPoly& mod) {
  UPoly r{1};
  UPoly b = divmod(p, base, mod).second;
  BigInt k = e;
  while (k > 0) {
    if ((k & 1) != 0) r = divmod(p, mul(p, r, b), mod).second;
    k >>= 1;
    if (k > 0) b = divmod(p, mul(p, b, b), mod).second;
  }
  return r;
}

UPoly derivative(int64_t p, const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = (a[i] * (int64_t(i) % p)) % p;
  return trim(std::move(r));
}

UPoly pth_root(int64_t p, const UPoly& a) {
  UPoly r;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (int64_t(i) % p != 0)
      fail(Errc::internal, "p-th root of a non-p-th-power");
    size_t j = i / p;
    if (r.size() <= j) r.resize(j + 1, 0);
    r[j] = a[i];
  }
  return trim(std::move(r));
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(int64_t p,
                                                            const UPoly& f0) {
  std::vector<std::pair<UPoly, int>> out;
  UPoly f = monic(p, f0);
  if (deg(f) <= 0) return out;
  UPoly fp = derivative(p, f);
  if (fp.empty()) {
    for (auto& [g, m] : squarefree_decomposition(p, pth_root(p, f)))
      out.push_back({g, m * int(p)});
    return out;
  }
  UPoly c = gcd(p, f, fp);
  UPoly w = divmod(p, f, c).first;
  int i = 1;
  while (deg(w) > 0) {
    UPoly y = gcd(p, w, c);
    UPoly z = divmod(p, w, y).first;
    if (deg(z) > 0) out.push_back({monic(p, z), i});
    w = std::move(y);
    c = divmod(p, c, w).first;
    ++i;
  }
  if (deg(c) > 0) {
    for (auto& [g, m] : squarefree_decomposition(p, pth_root(p, c)))
      out.push_back({g, m * int(p)});
  }
  return out;
}

namespace {

// Distinct-degree factorization of a monic squarefree f.
std::vector<std::pair<UPoly, int>> ddf(int64_t p, UPoly f) {
  std::vector<std::pair<UPoly, int>> out;
  UPoly h{0, 1};
  int d = 0;
  while (deg(f) > 0 && 2 * (d + 1) <= deg(f)) {
    ++d;
    h = powmod(p, h, BigInt(p), f);
    UPoly g = gcd(p, sub(p, h, UPoly{0, 1}), f);
    if (deg(g) > 0) {
      out.push_back({g, d});
      f = divmod(p, f, g).first;
      h = divmod(p, h, f).second;
    }
  }
  if (deg(f) > 0) out.push_back({f, deg(f)});
  return out;
}

UPoly random_upoly(int64_t p, int below_deg, Rng& rng) {
  UPoly r(below_deg);
  for (auto& c : r) c = int64_t(rng.below(uint64_t(p)));
  return trim(std::move(r));
}

// Equal-degree splitting: f is a monic squarefree product of irreducibles of
// degree d.
void edf(int64_t p, const UPoly& f, int d, Rng& rng,
         std::vector<UPoly>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  BigInt e = (boost::multiprecision::pow(BigInt(p), unsigned(d)) - 1) / 2;
  for (int tries = 0; tries < 200; ++tries) {
    UPoly a = random_upoly(p, deg(f), rng);
    if (deg(a) < 1) continue;
    UPoly g = gcd(p, a, f);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      edf(p, g, d, rng, out);
      edf(p, divmod(p, f, g).first, d, rng, out);
      return;
    }
    UPoly b = powmod(p, a, e, f);
    g = gcd(p, sub(p, b, UPoly{1}), f);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      edf(p, g, d, rng, out);
      edf(p, divmod(p, f, g).first, d, rng, out);
      return;
    }
  }
  fail(Errc::internal, "equal-degree splitting did not converge");
}

}  // namespace

std::vector<std::pair<UPoly, int>> factor(int64_t p, const UPoly& f,
                                          Rng& rng) {
  if (f.empty()) fail(Errc::malformed_input, "factoring the zero polynomial");
  std::vector<std::pair<UPoly, int>> out;
  for (const auto& [sf, mult] : squarefree_decomposition(p, f)) {
    for (const auto& [prod, d] : ddf(p, sf)) {
      std::vector<UPoly> irs;
      edf(p, prod, d, rng, irs);
      for (auto& q : irs) out.push_back({monic(p, q), mult});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_irreducible(int64_t p, const UPoly& f) {
  int n = deg(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  UPoly g = monic(p, f);
  UPoly x{0, 1};
  // x^(p^n) == x mod f, and gcd(x^(p^(n/q)) - x, f) == 1 for prime q | n.
  UPoly h = x;
  std::vector<int> prime_divs;
  int m = n;
  for (int q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      prime_divs.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) prime_divs.push_back(m);
  for (int q : prime_divs) {
    BigInt e = boost::multiprecision::pow(BigInt(p), unsigned(n / q));
    UPoly hq = powmod(p, x, e, g);
    if (deg(gcd(p, sub(p, hq, x), g)) != 0) return false;
  }
  BigInt e = boost::multiprecision::pow(BigInt(p), unsigned(n));
  UPoly hn = powmod(p, x, e, g);
  return sub(p, hn, x).empty();
}

}  // namespace lch::uv
