// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#include "textio.hpp"

#include <cctype>

#include "error.hpp"

namespace lch {

std::string mono_to_string(const Ring& ring, const Monomial& m) {
  std::string s;
  for (int i = 0; i < ring.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.vars()[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

namespace {

// Splits a coefficient into display sign and magnitude string.
std::pair<bool, std::string> coeff_display(const CoeffField& F,
                                           const Coeff& c) {
  std::string s = F.str(c);
  if (!s.empty() && s[0] == '-') return {true, s.substr(1)};
  return {false, s};
}

}  // namespace

std::string poly_to_string(const Ring& ring, const Poly& f) {
  if (f.is_zero()) return "0";
  const auto& F = ring.field();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    auto [neg, mag] = coeff_display(F, t.c);
    std::string ms = mono_to_string(ring, t.m);
    std::string body;
    if (ms.empty()) {
      body = mag;
    } else if (mag == "1") {
      body = ms;
    } else {
      body = mag + "*" + ms;
    }
    if (first) {
      out = (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

Lexer::Lexer(const std::string& src) {
  size_t n = src.size();
  size_t i = 0;
  while (i < n) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < n && src[i] != '\n') ++i;
      continue;
    }
    size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < n && (std::isalnum(static_cast<unsigned char>(src[i])) ||
                       src[i] == '_'))
        ++i;
      toks_.push_back({Token::Kind::ident, src.substr(start, i - start), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < n && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      toks_.push_back(
          {Token::Kind::integer, src.substr(start, i - start), start});
      continue;
    }
    if (c == '.' && i + 1 < n && src[i + 1] == '.') {
      toks_.push_back({Token::Kind::punct, "..", start});
      i += 2;
      continue;
    }
    static const std::string singles = "()[]{},;=^*+-/:<>|";
    if (singles.find(c) != std::string::npos) {
      toks_.push_back({Token::Kind::punct, std::string(1, c), start});
      ++i;
      continue;
    }
    throw Error(Errc::parse_error, "unexpected character '" +
                                       std::string(1, c) + "' at offset " +
                                       std::to_string(start));
  }
  toks_.push_back({Token::Kind::end, "", n});
}

const Token& Lexer::peek2() const {
  size_t j = i_ + 1 < toks_.size() ? i_ + 1 : toks_.size() - 1;
  return toks_[j];
}

Token Lexer::next() {
  Token t = toks_[i_];
  if (i_ + 1 < toks_.size()) ++i_;
  return t;
}

bool Lexer::accept(const std::string& text) {
  if (toks_[i_].text == text && toks_[i_].kind != Token::Kind::end) {
    next();
    return true;
  }
  return false;
}

void Lexer::expect(const std::string& text) {
  if (!accept(text)) die("expected '" + text + "'");
}

void Lexer::die(const std::string& msg) const {
  throw Error(Errc::parse_error, msg + " at offset " +
                                     std::to_string(toks_[i_].pos) + " near '" +
                                     (at_end() ? "<end>" : toks_[i_].text) +
                                     "'");
}

namespace {

bool starts_factor(const Token& t) {
  return t.kind == Token::Kind::ident || t.kind == Token::Kind::integer ||
         (t.kind == Token::Kind::punct && t.text == "(");
}

Poly parse_factor(Lexer& lx, const Ring& ring, const PolyEnv* env);

Poly parse_term(Lexer& lx, const Ring& ring, const PolyEnv* env) {
  Poly f = parse_factor(lx, ring, env);
  for (;;) {
    if (lx.accept("*")) {
      f = poly_mul(ring, f, parse_factor(lx, ring, env));
    } else if (starts_factor(lx.peek())) {
      f = poly_mul(ring, f, parse_factor(lx, ring, env));
    } else {
      return f;
    }
  }
}

Poly parse_sum(Lexer& lx, const Ring& ring, const PolyEnv* env) {
  bool neg = false;
  if (lx.accept("-"))
    neg = true;
  else
    lx.accept("+");
  Poly f = parse_term(lx, ring, env);
  if (neg) f = poly_neg(ring, f);
  for (;;) {
    if (lx.accept("+")) {
      f = poly_add(ring, f, parse_term(lx, ring, env));
    } else if (lx.accept("-")) {
      f = poly_sub(ring, f, parse_term(lx, ring, env));
    } else {
      return f;
    }
  }
}

Poly parse_base(Lexer& lx, const Ring& ring, const PolyEnv* env) {
  const Token& t = lx.peek();
  if (t.kind == Token::Kind::integer) {
    Token num = lx.next();
    BigInt n(num.text);
    if (lx.peek().text == "/" && lx.peek2().kind == Token::Kind::integer) {
      lx.next();
      Token den = lx.next();
      BigInt d(den.text);
      if (d == 0) lx.die("zero denominator");
      return poly_const(ring, ring.field().from_rat(BigRat(n, d)));
    }
    return poly_const(ring, ring.field().from_rat(BigRat(n)));
  }
  if (t.kind == Token::Kind::ident) {
    Token id = lx.next();
    int v = ring.var_index(id.text);
    if (v >= 0) return poly_var(ring, v);
    if (env) {
      if (const Poly* p = env->lookup(id.text)) return *p;
    }
    throw Error(Errc::undeclared_name,
                "unknown name '" + id.text + "' in polynomial expression");
  }
  if (t.text == "(") {
    lx.next();
    Poly f = parse_sum(lx, ring, env);
    lx.expect(")");
    return f;
  }
  lx.die("expected polynomial factor");
}

Poly parse_factor(Lexer& lx, const Ring& ring, const PolyEnv* env) {
  Poly base = parse_base(lx, ring, env);
  if (lx.accept("^")) {
    const Token& e = lx.peek();
    if (e.kind != Token::Kind::integer) lx.die("expected integer exponent");
    long exp = std::stol(lx.next().text);
    return poly_pow(ring, base, exp);
  }
  return base;
}

}  // namespace

Poly parse_poly_expr(Lexer& lx, const Ring& ring, const PolyEnv* env) {
  return parse_sum(lx, ring, env);
}

Poly parse_poly_string(const Ring& ring, const std::string& text) {
  Lexer lx(text);
  Poly f = parse_poly_expr(lx, ring, nullptr);
  if (!lx.at_end()) lx.die("trailing input after polynomial");
  return f;
}

}  // namespace lch
