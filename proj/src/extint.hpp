// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <string>

namespace lch {

// Integer extended with +infinity.  Dimensions use finite values >= -1 (the
// unit ideal has dimension -1); depths use values >= 0 or infinity.
class ExtInt {
 public:
  ExtInt() : finite_(true), v_(0) {}
  explicit ExtInt(long v) : finite_(true), v_(v) {}
  static ExtInt infinity() {
    ExtInt e;
    e.finite_ = false;
    return e;
  }

  bool is_finite() const { return finite_; }
  long value() const { return v_; }

  friend bool operator==(const ExtInt& a, const ExtInt& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }
  friend bool operator<(const ExtInt& a, const ExtInt& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const ExtInt& a, const ExtInt& b) {
    return a == b || a < b;
  }
  friend bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }
  friend bool operator>=(const ExtInt& a, const ExtInt& b) { return b <= a; }

  std::string str() const {
    return finite_ ? std::to_string(v_) : std::string("infinity");
  }

 private:
  bool finite_;
  long v_;
};

}  // namespace lch
