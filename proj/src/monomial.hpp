// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace lch {

// Exponent vector over a fixed variable list.  The ambient ring fixes the
// length; all monomials in one context have equal length.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<int32_t> e) : e_(std::move(e)) {}

  int nvars() const { return int(e_.size()); }
  int32_t operator[](int i) const { return e_[i]; }
  int32_t& operator[](int i) { return e_[i]; }
  const std::vector<int32_t>& exps() const { return e_; }

  long degree() const {
    long d = 0;
    for (int32_t x : e_) d += x;
    return d;
  }
  bool is_one() const {
    for (int32_t x : e_)
      if (x != 0) return false;
    return true;
  }
  bool divides(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
  }
  // Exact quotient; caller guarantees divisibility.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.e_.size(); ++i)
      if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
    return r;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] > 0 && b.e_[i] > 0) return false;
    return true;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e_ == b.e_;
  }

 private:
  std::vector<int32_t> e_;
};

// Monomial orders.  Canonical contexts use grevlex; lex and the block
// elimination order exist only for internal elimination steps.
struct MonomialOrder {
  enum class Kind { grevlex, lex, block };
  Kind kind = Kind::grevlex;
  // For block: the first `block` variables form the dominant block; both
  // blocks are compared by grevlex.
  int block = 0;

  static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder block_elim(int first_block) {
    return {Kind::block, first_block};
  }

  // Returns +1 if a > b, 0 if equal, -1 if a < b.
  int cmp(const Monomial& a, const Monomial& b) const;
};

}  // namespace lch
