#include "strmod/field.hpp"

namespace strmod {

bool is_prime_int64(std::int64_t n) {
  if (n < 2)
    return false;
  if (n % 2 == 0)
    return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0)
      return false;
  return true;
}

FieldSpec FieldSpec::rationals() { return FieldSpec(0); }

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t{1} << 31))
    throw UsageError("prime field modulus out of range: " + std::to_string(p));
  if (!is_prime_int64(p))
    throw UsageError("modulus is not prime: " + std::to_string(p));
  return FieldSpec(p);
}

const mpq_class& FieldSpec::q(const Scalar& a) const {
  if (!a.is_residue())
    return a.rational();
  throw UsageError("scalar does not belong to the rationals");
}

std::int64_t FieldSpec::r(const Scalar& a) const {
  if (a.is_residue())
    return a.residue();
  throw UsageError("scalar does not belong to GF(" + std::to_string(p_) + ")");
}

Scalar FieldSpec::zero() const {
  return is_rationals() ? Scalar(mpq_class(0)) : Scalar(std::int64_t{0});
}

Scalar FieldSpec::one() const {
  return is_rationals() ? Scalar(mpq_class(1)) : Scalar(std::int64_t{1});
}

Scalar FieldSpec::from_int(std::int64_t n) const {
  if (is_rationals())
    return Scalar(mpq_class(static_cast<long>(n)));
  return Scalar(fp_reduce(n));
}

Scalar FieldSpec::from_fraction(std::int64_t num, std::int64_t den) const {
  if (den == 0)
    throw DomainError("zero denominator");
  if (is_rationals()) {
    mpq_class v(static_cast<long>(num), static_cast<long>(den));
    v.canonicalize();
    return Scalar(v);
  }
  return mul(from_int(num), inv(from_int(den)));
}

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const {
  if (is_rationals())
    return Scalar(mpq_class(q(a) + q(b)));
  return Scalar(fp_add(r(a), r(b)));
}

Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const {
  if (is_rationals())
    return Scalar(mpq_class(q(a) - q(b)));
  return Scalar(fp_sub(r(a), r(b)));
}

Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const {
  if (is_rationals())
    return Scalar(mpq_class(q(a) * q(b)));
  return Scalar(fp_mul(r(a), r(b)));
}

Scalar FieldSpec::neg(const Scalar& a) const {
  if (is_rationals())
    return Scalar(mpq_class(-q(a)));
  return Scalar(fp_neg(r(a)));
}

std::int64_t FieldSpec::fp_inv(std::int64_t a) const {
  if (a == 0)
    throw DomainError("division by zero in GF(" + std::to_string(p_) + ")");
  // extended Euclid
  std::int64_t t = 0, new_t = 1, rr = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t quot = rr / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = rr - quot * new_r;
    rr = new_r;
    new_r = tmp;
  }
  return t < 0 ? t + p_ : t;
}

Scalar FieldSpec::inv(const Scalar& a) const {
  if (is_rationals()) {
    if (q(a) == 0)
      throw DomainError("division by zero");
    return Scalar(mpq_class(1 / q(a)));
  }
  return Scalar(fp_inv(r(a)));
}

Scalar FieldSpec::div(const Scalar& a, const Scalar& b) const {
  return mul(a, inv(b));
}

bool FieldSpec::is_zero(const Scalar& a) const {
  return is_rationals() ? q(a) == 0 : r(a) == 0;
}

bool FieldSpec::is_one(const Scalar& a) const {
  return is_rationals() ? q(a) == 1 : r(a) == 1;
}

bool FieldSpec::accepts(const Scalar& a) const {
  if (is_rationals())
    return !a.is_residue();
  return a.is_residue() && a.residue() >= 0 && a.residue() < p_;
}

std::string FieldSpec::to_string(const Scalar& a) const {
  if (is_rationals())
    return q(a).get_str();
  return std::to_string(r(a));
}

std::string FieldSpec::to_string() const {
  return is_rationals() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

} // namespace strmod
