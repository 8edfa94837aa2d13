// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "poly.hpp"

namespace lch {

// Coefficients of f as a dense polynomial in variable v; entries are free
// of v.
std::vector<Poly> coeffs_wrt(const Ring& ring, const Poly& f, int v);
Poly from_coeffs(const Ring& ring, const std::vector<Poly>& cs, int v);
int deg_wrt(const Poly& f, int v);

// Multivariate gcd by primitive pseudo-remainder sequences; result is monic
// under the ring order (gcd of 0, 0 is 0).
Poly mv_gcd(const Ring& ring, const Poly& a, const Poly& b);

// Product of the distinct irreducible factors of f, monic under the ring
// order; constants map to 1.
Poly squarefree_part(const Ring& ring, const Poly& f);

}  // namespace lch
