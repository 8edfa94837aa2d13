// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace lch {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// A field element.  Over F_p the value is the canonical representative in
// [0, p); over Q it is a reduced rational.
using Coeff = std::variant<int64_t, BigRat>;

// Exact coefficient field: Q or F_p with p an odd prime below 2^31 (so that
// products of canonical representatives fit in int64_t).
class CoeffField {
 public:
  enum class Kind { rationals, prime };

  static CoeffField rationals();
  static CoeffField prime(int64_t p);

  Kind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == Kind::prime; }
  int64_t characteristic() const { return kind_ == Kind::prime ? p_ : 0; }

  Coeff zero() const;
  Coeff one() const;
  Coeff from_int(int64_t n) const;
  Coeff from_rat(const BigRat& q) const;

  bool is_zero(const Coeff& a) const;
  bool is_one(const Coeff& a) const;
  bool eq(const Coeff& a, const Coeff& b) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const;

  // Canonical rendering; F_p values print as the representative in the
  // symmetric range (-p/2, p/2].
  std::string str(const Coeff& a) const;

  // Total order on canonical representatives, used only for deterministic
  // serialization tie-breaks.
  int cmp(const Coeff& a, const Coeff& b) const;

  // Exact square root when one exists in the field.
  std::optional<Coeff> sqrt(const Coeff& a) const;

  bool operator==(const CoeffField& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }

 private:
  CoeffField(Kind k, int64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  int64_t p_;
};

}  // namespace lch
