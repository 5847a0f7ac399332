#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

#include "indepforge/errors.hpp"

namespace indepforge {

class Scalar;

/// Coefficient field descriptor: GF(p) for a prime p < 2^31, or the
/// arbitrary-precision rationals (characteristic 0).
class Field {
 public:
  Field() = default;  // rationals

  static Field gfp(uint32_t p);
  static Field rationals() { return Field(); }

  bool is_prime_field() const { return p_ != 0; }
  uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long n) const;
  Scalar from_fraction(long long num, long long den) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  std::string describe() const;

 private:
  explicit Field(uint32_t p) : p_(p) {}
  uint32_t p_ = 0;  // 0 = rationals
};

/// Exact field element. Prime-field values live in [0, p); rational values
/// are stored reduced behind a shared immutable handle (null handle = 0).
class Scalar {
 public:
  Scalar() = default;  // rational zero

  uint32_t characteristic() const { return p_; }
  Field field() const { return p_ ? Field::gfp(p_) : Field::rationals(); }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text form: prime-field values as their representative in
  /// [0, p), rationals as "n" or "n/d".
  std::string str() const;

  /// Representative as a signed integer in (-p/2, p/2] for prime fields;
  /// throws for non-integral rationals.
  long long lifted_int() const;

 private:
  friend class Field;
  static Scalar make_fp(uint32_t p, uint64_t v) {
    Scalar s;
    s.p_ = p;
    s.v_ = v;
    return s;
  }
  static Scalar make_rat(mpq_class q);
  const mpq_class& rat() const;

  uint32_t p_ = 0;   // 0 = rationals
  uint64_t v_ = 0;   // prime-field value in [0, p)
  std::shared_ptr<const mpq_class> q_;  // rational value; null = 0
};

}  // namespace indepforge
