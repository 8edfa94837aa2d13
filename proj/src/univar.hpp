// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "coeff.hpp"
#include "rng.hpp"

namespace lch::uv {

// Dense univariate polynomial over F_p: c[i] is the coefficient of x^i,
// trailing zeros stripped; the zero polynomial is the empty vector.
using UPoly = std::vector<int64_t>;

UPoly trim(UPoly a);
int deg(const UPoly& a);
UPoly add(int64_t p, const UPoly& a, const UPoly& b);
UPoly sub(int64_t p, const UPoly& a, const UPoly& b);
UPoly mul(int64_t p, const UPoly& a, const UPoly& b);
UPoly scale(int64_t p, int64_t c, const UPoly& a);
UPoly monic(int64_t p, const UPoly& a);
std::pair<UPoly, UPoly> divmod(int64_t p, const UPoly& a, const UPoly& b);
UPoly gcd(int64_t p, UPoly a, UPoly b);
UPoly powmod(int64_t p, const UPoly& base, const BigInt& e, const UPoly& mod);
UPoly derivative(int64_t p, const UPoly& a);
// Inverse of Frobenius on exponents; requires all exponents divisible by p.
UPoly pth_root(int64_t p, const UPoly& a);

// Monic squarefree factors with multiplicities, deterministic order.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(int64_t p,
                                                            const UPoly& f);

// Monic irreducible factors with multiplicities (Cantor-Zassenhaus equal
// degree splitting; p odd).  Factors sorted by (degree, coefficients).
std::vector<std::pair<UPoly, int>> factor(int64_t p, const UPoly& f, Rng& rng);

// Deterministic irreducibility test (Rabin).
bool is_irreducible(int64_t p, const UPoly& f);

}  // namespace lch::uv
