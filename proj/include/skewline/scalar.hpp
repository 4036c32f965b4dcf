#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "skewline/error.hpp"

namespace skewline {

enum class RingKind { Rational, PrimeField, RationalQuaternion };

// Identifies the coordinate division ring of a plane model. Prime fields
// carry their modulus, which is checked for primality on creation.
class RingDescriptor {
 public:
  static RingDescriptor rational() { return RingDescriptor(RingKind::Rational, 0); }
  static RingDescriptor prime_field(std::uint32_t p);
  static RingDescriptor quaternion() {
    return RingDescriptor(RingKind::RationalQuaternion, 0);
  }
  // Accepts "rational", "gf(p)" and "quaternion".
  static RingDescriptor parse(std::string_view text);

  RingKind kind() const { return kind_; }
  std::uint32_t modulus() const { return modulus_; }
  bool ordered() const { return kind_ == RingKind::Rational; }
  bool commutative() const { return kind_ != RingKind::RationalQuaternion; }
  bool finite() const { return kind_ == RingKind::PrimeField; }
  std::string name() const;

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;

 private:
  friend class Scalar;
  RingDescriptor(RingKind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

  RingKind kind_;
  std::uint32_t modulus_;
};

bool is_prime(std::uint64_t n);

enum class Ordering { Less, Equal, Greater };

// An exact element of one of the supported division rings. Values are
// immutable; arithmetic between different rings throws RingMismatch.
class Scalar {
 public:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };
  struct Quaternion {
    mpq_class a, b, c, d;  // a + bi + cj + dk
  };

  static Scalar zero(const RingDescriptor& ring);
  static Scalar one(const RingDescriptor& ring);
  static Scalar from_int(const RingDescriptor& ring, long long n);
  static Scalar rational(const mpq_class& q);
  static Scalar rational(long long num, long long den = 1);
  static Scalar residue(long long value, std::uint32_t modulus);
  static Scalar quaternion(const mpq_class& a, const mpq_class& b, const mpq_class& c,
                           const mpq_class& d);
  // Parses the canonical text forms (`a/b`, `k mod p`, `a+bi+cj+dk`) plus
  // the obvious shorthands (`3`, `-i`, `1/2+j`).
  static Scalar parse(const RingDescriptor& ring, std::string_view text);

  RingDescriptor ring() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar inverse() const;

  const mpq_class& as_rational() const;
  const Residue& as_residue() const;
  const Quaternion& as_quaternion() const;

  // Only meaningful for rationals; used for plotting.
  double to_double() const;
  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  using Value = std::variant<mpq_class, Residue, Quaternion>;
  explicit Scalar(Value v) : value_(std::move(v)) {}

  Value value_;
};

// Field order; throws OrderUnavailable for unordered rings.
Ordering compare(const Scalar& a, const Scalar& b);

// Structural total order for use as a container key. Unrelated to the field
// order and defined for every ring.
bool canonical_less(const Scalar& a, const Scalar& b);

}  // namespace skewline
