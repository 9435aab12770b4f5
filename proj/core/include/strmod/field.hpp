#ifndef STRMOD_FIELD_HPP
#define STRMOD_FIELD_HPP
//
// strmod / field
// Exact coefficient fields: prime fields GF(p) with p < 2^31 and the
// rationals. GF(p) elements are canonical residues in [0, p); rationals are
// GMP mpq values in lowest terms. All arithmetic goes through FieldSpec so a
// Scalar is meaningful only together with its field.
//

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <variant>

#include "strmod/errors.hpp"

namespace strmod {

/// Exact field element; alternative 0 = GF(p) residue, alternative 1 = rational.
class Scalar {
public:
  Scalar() : v_(std::int64_t{0}) {}
  explicit Scalar(std::int64_t residue) : v_(residue) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}

  bool is_residue() const { return v_.index() == 0; }
  std::int64_t residue() const { return std::get<0>(v_); }
  const mpq_class& rational() const { return std::get<1>(v_); }

  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

private:
  std::variant<std::int64_t, mpq_class> v_;
};

class FieldSpec {
public:
  /// The field of rational numbers.
  static FieldSpec rationals();

  /// GF(p). Rejects composite or out-of-range moduli (2 <= p < 2^31).
  static FieldSpec prime(std::int64_t p);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }

  /// p for GF(p), 0 for the rationals.
  std::int64_t characteristic() const { return p_; }

  bool operator==(const FieldSpec& o) const { return p_ == o.p_; }
  bool operator!=(const FieldSpec& o) const { return p_ != o.p_; }

  // -- element constructors ------------------------------------------------

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  /// num/den with den != 0; over GF(p) this is num * den^-1.
  Scalar from_fraction(std::int64_t num, std::int64_t den) const;

  // -- arithmetic ----------------------------------------------------------

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const; // throws DomainError on zero
  Scalar div(const Scalar& a, const Scalar& b) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;

  /// True when the value is a canonical element of this field.
  bool accepts(const Scalar& a) const;

  std::string to_string(const Scalar& a) const;
  std::string to_string() const; // "Q" or "GF(p)"

  // -- raw GF(p) helpers used by the dense kernels --------------------------

  std::int64_t fp_add(std::int64_t a, std::int64_t b) const {
    std::int64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::int64_t fp_sub(std::int64_t a, std::int64_t b) const {
    std::int64_t s = a - b;
    return s < 0 ? s + p_ : s;
  }
  std::int64_t fp_mul(std::int64_t a, std::int64_t b) const {
    return static_cast<std::int64_t>(
        (static_cast<unsigned __int128>(static_cast<std::uint64_t>(a)) *
         static_cast<std::uint64_t>(b)) %
        static_cast<std::uint64_t>(p_));
  }
  std::int64_t fp_neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::int64_t fp_inv(std::int64_t a) const;
  std::int64_t fp_reduce(std::int64_t n) const {
    std::int64_t r = n % p_;
    return r < 0 ? r + p_ : r;
  }

private:
  explicit FieldSpec(std::int64_t p) : p_(p) {}
  std::int64_t p_ = 0; // 0 = rationals

  const mpq_class& q(const Scalar& a) const;
  std::int64_t r(const Scalar& a) const;
};

bool is_prime_int64(std::int64_t n);

} // namespace strmod

#endif
