// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#include "monomial.hpp"

namespace lch {
namespace {

// grevlex on the index window [lo, hi): higher total degree wins; on ties the
// monomial with the smaller exponent at the last differing index wins.
int grevlex_window(const Monomial& a, const Monomial& b, int lo, int hi) {
  long da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int lex_window(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = lo; i < hi; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  int n = a.nvars();
  switch (kind) {
    case Kind::grevlex:
      return grevlex_window(a, b, 0, n);
    case Kind::lex:
      return lex_window(a, b, 0, n);
    case Kind::block: {
      int c = grevlex_window(a, b, 0, block);
      if (c != 0) return c;
      return grevlex_window(a, b, block, n);
    }
  }
  return 0;
}

}  // namespace lch
