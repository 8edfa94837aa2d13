// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "poly.hpp"
#include "ring.hpp"

namespace lch {

// Canonical rendering: terms in descending order, signs folded into the
// separators, `*` between coefficient and variables, `^` for exponents.
// Examples: "x^2 + 3*x*y - y", "0", "-1/2*x + 1".
std::string mono_to_string(const Ring& ring, const Monomial& m);
std::string poly_to_string(const Ring& ring, const Poly& f);

struct Token {
  enum class Kind { ident, integer, punct, end };
  Kind kind = Kind::end;
  std::string text;
  size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src);
  const Token& peek() const { return toks_[i_]; }
  const Token& peek2() const;
  Token next();
  bool at_end() const { return toks_[i_].kind == Token::Kind::end; }
  // Accepts the given punctuation or keyword if present.
  bool accept(const std::string& text);
  void expect(const std::string& text);
  [[noreturn]] void die(const std::string& msg) const;

 private:
  std::vector<Token> toks_;
  size_t i_ = 0;
};

// Parses a polynomial expression over the given ring, with named lookups for
// previously bound polynomials (may be null).  Grammar: sums of products of
// powers; integer and rational literals; implicit multiplication between
// adjacent factors.
class PolyEnv {
 public:
  virtual ~PolyEnv() = default;
  virtual const Poly* lookup(const std::string& name) const = 0;
};

Poly parse_poly_expr(Lexer& lx, const Ring& ring, const PolyEnv* env);
Poly parse_poly_string(const Ring& ring, const std::string& text);

}  // namespace lch
