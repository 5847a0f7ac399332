#include "indepforge/scalar.hpp"

namespace indepforge {

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Extended Euclid inverse of a mod p, a in [1, p).
uint64_t inv_mod(uint64_t a, uint64_t p) {
  int64_t t = 0, new_t = 1;
  int64_t r = static_cast<int64_t>(p), new_r = static_cast<int64_t>(a);
  while (new_r != 0) {
    int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<int64_t>(p);
  return static_cast<uint64_t>(t);
}

void check_same_field(const Scalar& a, const Scalar& b) {
  if (a.characteristic() != b.characteristic())
    fail(ErrorCode::FieldMismatch, "scalars belong to different fields");
}

const mpq_class kZeroRat(0);

}  // namespace

Field Field::gfp(uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31))
    fail(ErrorCode::ValidationError,
         "field characteristic must be a prime < 2^31, got " +
             std::to_string(p));
  return Field(p);
}

Scalar Field::zero() const {
  return p_ ? Scalar::make_fp(p_, 0) : Scalar();
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long n) const {
  if (p_) {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Scalar::make_fp(p_, static_cast<uint64_t>(r));
  }
  return Scalar::make_rat(mpq_class(static_cast<long>(n)));
}

Scalar Field::from_fraction(long long num, long long den) const {
  if (den == 0) fail(ErrorCode::ValidationError, "zero denominator");
  if (p_) {
    Scalar d = from_int(den);
    if (d.is_zero())
      fail(ErrorCode::ValidationError,
           "denominator vanishes in GF(" + std::to_string(p_) + ")");
    return from_int(num) / d;
  }
  mpq_class q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return Scalar::make_rat(q);
}

std::string Field::describe() const {
  return p_ ? "GF(" + std::to_string(p_) + ")" : "QQ";
}

Scalar Scalar::make_rat(mpq_class q) {
  Scalar s;
  if (q != 0) s.q_ = std::make_shared<const mpq_class>(std::move(q));
  return s;
}

const mpq_class& Scalar::rat() const { return q_ ? *q_ : kZeroRat; }

bool Scalar::is_zero() const { return p_ ? v_ == 0 : q_ == nullptr; }

bool Scalar::is_one() const { return p_ ? v_ == 1 : (q_ && *q_ == 1); }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(*this, o);
  if (p_) {
    uint64_t s = v_ + o.v_;
    if (s >= p_) s -= p_;
    return make_fp(p_, s);
  }
  return make_rat(rat() + o.rat());
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(*this, o);
  if (p_) {
    uint64_t s = v_ + p_ - o.v_;
    if (s >= p_) s -= p_;
    return make_fp(p_, s);
  }
  return make_rat(rat() - o.rat());
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(*this, o);
  if (p_) return make_fp(p_, (v_ * o.v_) % p_);
  if (!q_ || !o.q_) return Scalar();
  return make_rat(rat() * o.rat());
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
  if (p_) return make_fp(p_, v_ == 0 ? 0 : p_ - v_);
  if (!q_) return *this;
  return make_rat(-rat());
}

Scalar Scalar::inv() const {
  if (is_zero()) fail(ErrorCode::ValidationError, "division by zero scalar");
  if (p_) return make_fp(p_, inv_mod(v_, p_));
  return make_rat(1 / rat());
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(*this, o);
  if (p_) return v_ == o.v_;
  return rat() == o.rat();
}

std::string Scalar::str() const {
  if (p_) return std::to_string(v_);
  return rat().get_str();
}

long long Scalar::lifted_int() const {
  if (p_) {
    long long v = static_cast<long long>(v_);
    if (v > static_cast<long long>(p_ / 2)) v -= p_;
    return v;
  }
  if (rat().get_den() != 1)
    fail(ErrorCode::ValidationError, "non-integral rational");
  return static_cast<long long>(rat().get_num().get_si());
}

}  // namespace indepforge
