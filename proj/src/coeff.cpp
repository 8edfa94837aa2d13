// Copyright (c) 2026 the lch authors
// SPDX-License-Identifier: Apache-2.0
#include "coeff.hpp"

#include "error.hpp"

namespace lch {
namespace {

bool is_prime_i64(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int64_t mod_pos(int64_t a, int64_t p) {
  int64_t r = a % p;
  return r < 0 ? r + p : r;
}

int64_t inv_mod(int64_t a, int64_t p) {
  int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    int64_t q = r / nr;
    int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) fail(Errc::internal, "element not invertible mod p");
  return mod_pos(t, p);
}

}  // namespace

CoeffField CoeffField::rationals() { return CoeffField(Kind::rationals, 0); }

CoeffField CoeffField::prime(int64_t p) {
  if (p < 3 || p >= (int64_t(1) << 31) || !is_prime_i64(p))
    fail(Errc::unsupported_field,
         "field characteristic must be an odd prime below 2^31, got " +
             std::to_string(p));
  return CoeffField(Kind::prime, p);
}

Coeff CoeffField::zero() const {
  if (kind_ == Kind::prime) return int64_t(0);
  return BigRat(0);
}

Coeff CoeffField::one() const {
  if (kind_ == Kind::prime) return int64_t(1);
  return BigRat(1);
}

Coeff CoeffField::from_int(int64_t n) const {
  if (kind_ == Kind::prime) return mod_pos(n, p_);
  return BigRat(n);
}

Coeff CoeffField::from_rat(const BigRat& q) const {
  if (kind_ == Kind::rationals) return q;
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  int64_t n = int64_t(num % p_);
  int64_t d = int64_t(den % p_);
  if (d == 0) fail(Errc::malformed_input, "denominator divisible by p");
  return mod_pos(n * inv_mod(mod_pos(d, p_), p_), p_);
}

bool CoeffField::is_zero(const Coeff& a) const {
  if (kind_ == Kind::prime) return std::get<int64_t>(a) == 0;
  return std::get<BigRat>(a) == 0;
}

bool CoeffField::is_one(const Coeff& a) const {
  if (kind_ == Kind::prime) return std::get<int64_t>(a) == 1;
  return std::get<BigRat>(a) == 1;
}

bool CoeffField::eq(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::prime)
    return std::get<int64_t>(a) == std::get<int64_t>(b);
  return std::get<BigRat>(a) == std::get<BigRat>(b);
}

Coeff CoeffField::add(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::prime) {
    int64_t s = std::get<int64_t>(a) + std::get<int64_t>(b);
    return s >= p_ ? s - p_ : s;
  }
  return BigRat(std::get<BigRat>(a) + std::get<BigRat>(b));
}

Coeff CoeffField::sub(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::prime) {
    int64_t s = std::get<int64_t>(a) - std::get<int64_t>(b);
    return s < 0 ? s + p_ : s;
  }
  return BigRat(std::get<BigRat>(a) - std::get<BigRat>(b));
}

Coeff CoeffField::neg(const Coeff& a) const {
  if (kind_ == Kind::prime) {
    int64_t v = std::get<int64_t>(a);
    return v == 0 ? int64_t(0) : p_ - v;
  }
  return BigRat(-std::get<BigRat>(a));
}

Coeff CoeffField::mul(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::prime)
    return mod_pos(std::get<int64_t>(a) * std::get<int64_t>(b), p_);
  return BigRat(std::get<BigRat>(a) * std::get<BigRat>(b));
}

Coeff CoeffField::inv(const Coeff& a) const {
  if (is_zero(a)) fail(Errc::malformed_input, "division by zero coefficient");
  if (kind_ == Kind::prime) return inv_mod(std::get<int64_t>(a), p_);
  return BigRat(1 / std::get<BigRat>(a));
}

Coeff CoeffField::div(const Coeff& a, const Coeff& b) const {
  return mul(a, inv(b));
}

std::string CoeffField::str(const Coeff& a) const {
  if (kind_ == Kind::prime) {
    int64_t v = std::get<int64_t>(a);
    if (2 * v > p_) v -= p_;
    return std::to_string(v);
  }
  const BigRat& q = std::get<BigRat>(a);
  return q.str();
}

int CoeffField::cmp(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::prime) {
    int64_t x = std::get<int64_t>(a), y = std::get<int64_t>(b);
    return x < y ? -1 : x > y ? 1 : 0;
  }
  const BigRat &x = std::get<BigRat>(a), &y = std::get<BigRat>(b);
  return x < y ? -1 : x > y ? 1 : 0;
}

namespace {

int64_t pow_mod(int64_t b, int64_t e, int64_t p) {
  int64_t r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

std::optional<Coeff> CoeffField::sqrt(const Coeff& a) const {
  if (kind_ == Kind::rationals) {
    const BigRat& q = std::get<BigRat>(a);
    if (q < 0) return std::nullopt;
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    BigInt rn = boost::multiprecision::sqrt(num);
    BigInt rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Coeff(BigRat(rn, rd));
  }
  int64_t n = std::get<int64_t>(a);
  if (n == 0) return Coeff(int64_t(0));
  if (pow_mod(n, (p_ - 1) / 2, p_) != 1) return std::nullopt;
  if (p_ % 4 == 3) return Coeff(pow_mod(n, (p_ + 1) / 4, p_));
  // Tonelli-Shanks.
  int64_t q = p_ - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  int64_t z = 2;
  while (pow_mod(z, (p_ - 1) / 2, p_) != p_ - 1) ++z;
  int64_t m = s;
  int64_t c = pow_mod(z, q, p_);
  int64_t t = pow_mod(n, q, p_);
  int64_t r = pow_mod(n, (q + 1) / 2, p_);
  while (t != 1) {
    int64_t i = 0, tt = t;
    while (tt != 1) {
      tt = tt * tt % p_;
      ++i;
    }
    int64_t b = pow_mod(c, int64_t(1) << (m - i - 1), p_);
    m = i;
    c = b * b % p_;
    t = t * c % p_;
    r = r * b % p_;
  }
  return Coeff(r);
}

}  // namespace lch
