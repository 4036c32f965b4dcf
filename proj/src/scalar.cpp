#include "skewline/scalar.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace skewline {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RingMismatch: return "ring-mismatch";
    case ErrorKind::InvalidRing: return "invalid-ring";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::OrderUnavailable: return "order-unavailable";
    case ErrorKind::ParseScalar: return "parse-scalar";
    case ErrorKind::DegenerateJoin: return "degenerate-join";
    case ErrorKind::NotEnumerable: return "not-enumerable";
    case ErrorKind::InvalidConfiguration: return "invalid-configuration";
    case ErrorKind::DegenerateHexagon: return "degenerate-hexagon";
    case ErrorKind::HypothesisNotMet: return "hypothesis-not-met";
    case ErrorKind::InvalidProjection: return "invalid-projection";
    case ErrorKind::NotOnSource: return "not-on-source";
    case ErrorKind::NotOnLine: return "not-on-line";
    case ErrorKind::InvalidFrame: return "invalid-frame";
    case ErrorKind::ConstructionDegenerate: return "construction-degenerate";
    case ErrorKind::SuiteModelMismatch: return "suite-model-mismatch";
    case ErrorKind::NotPlottable: return "not-plottable";
    case ErrorKind::InvalidTrace: return "invalid-trace";
  }
  return "unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

RingDescriptor RingDescriptor::prime_field(std::uint32_t p) {
  if (!is_prime(p)) {
    throw GeometryError(ErrorKind::InvalidRing, std::to_string(p) + " is not prime");
  }
  return RingDescriptor(RingKind::PrimeField, p);
}

RingDescriptor RingDescriptor::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::tolower(ch));
  }
  if (s == "rational" || s == "q") return rational();
  if (s == "quaternion" || s == "h") return quaternion();
  if (s.size() > 4 && s.rfind("gf(", 0) == 0 && s.back() == ')') {
    std::uint32_t p = 0;
    auto digits = std::string_view(s).substr(3, s.size() - 4);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime_field(p);
  }
  throw GeometryError(ErrorKind::InvalidRing, "unknown model '" + std::string(text) + "'");
}

std::string RingDescriptor::name() const {
  switch (kind_) {
    case RingKind::Rational: return "rational";
    case RingKind::PrimeField: return "gf(" + std::to_string(modulus_) + ")";
    case RingKind::RationalQuaternion: return "quaternion";
  }
  return "?";
}

namespace {

std::uint32_t reduce(long long value, std::uint32_t p) {
  long long r = value % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // extended Euclid on (a, p)
  long long t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    t = t - q * new_t;
    std::swap(t, new_t);
    r = r - q * new_r;
    std::swap(r, new_r);
  }
  return reduce(t, p);
}

std::string rational_text(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw GeometryError(ErrorKind::ParseScalar, "cannot parse '" + std::string(text) + "': " + why);
}

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  return s;
}

// Reads an unsigned `n` or `n/d` at pos; returns nullopt if no digit there.
std::optional<mpq_class> read_unsigned_rational(std::string_view s, std::size_t& pos,
                                                std::string_view original) {
  auto digits = [&](std::size_t& p) {
    std::size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    return std::string(s.substr(start, p - start));
  };
  std::size_t p = pos;
  std::string num = digits(p);
  if (num.empty()) return std::nullopt;
  mpz_class n(num);
  mpz_class d(1);
  if (p < s.size() && s[p] == '/') {
    ++p;
    std::string den = digits(p);
    if (den.empty()) parse_fail(original, "missing denominator");
    d = mpz_class(den);
    if (d == 0) parse_fail(original, "zero denominator");
  }
  pos = p;
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

// Signs may be stacked ("+-3"); returns true for an overall negative sign.
bool read_signs(std::string_view s, std::size_t& pos) {
  bool negative = false;
  while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    if (s[pos] == '-') negative = !negative;
    ++pos;
  }
  return negative;
}

mpq_class parse_rational_text(std::string_view original) {
  std::string s = strip_spaces(original);
  std::size_t pos = 0;
  bool negative = read_signs(s, pos);
  auto q = read_unsigned_rational(s, pos, original);
  if (!q || pos != s.size()) parse_fail(original, "expected a rational like -5/6");
  return negative ? mpq_class(-*q) : *q;
}

Scalar::Quaternion parse_quaternion_text(std::string_view original) {
  std::string s = strip_spaces(original);
  if (s.empty()) parse_fail(original, "empty");
  Scalar::Quaternion out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t term_start = pos;
    bool negative = read_signs(s, pos);
    if (pos == term_start && term_start != 0) parse_fail(original, "expected '+' or '-'");
    auto coefficient = read_unsigned_rational(s, pos, original);
    char unit = 0;
    if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j' || s[pos] == 'k')) unit = s[pos++];
    if (!coefficient && unit == 0) parse_fail(original, "expected a quaternion term");
    mpq_class value = coefficient ? *coefficient : mpq_class(1);
    if (negative) value = -value;
    switch (unit) {
      case 'i': out.b += value; break;
      case 'j': out.c += value; break;
      case 'k': out.d += value; break;
      default: out.a += value; break;
    }
  }
  return out;
}

const RingDescriptor& check_same(const RingDescriptor& a, const RingDescriptor& b) {
  if (!(a == b)) {
    throw GeometryError(ErrorKind::RingMismatch, "cannot combine " + a.name() + " with " + b.name());
  }
  return a;
}

bool quaternion_equal(const Scalar::Quaternion& x, const Scalar::Quaternion& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

}  // namespace

Scalar Scalar::zero(const RingDescriptor& ring) { return from_int(ring, 0); }

Scalar Scalar::one(const RingDescriptor& ring) { return from_int(ring, 1); }

Scalar Scalar::from_int(const RingDescriptor& ring, long long n) {
  switch (ring.kind()) {
    case RingKind::Rational: return rational(n);
    case RingKind::PrimeField: return residue(n, ring.modulus());
    case RingKind::RationalQuaternion: {
      mpq_class a;
      a = mpz_class(std::to_string(n));
      return quaternion(a, 0, 0, 0);
    }
  }
  throw GeometryError(ErrorKind::InvalidRing, "unknown ring");
}

Scalar Scalar::rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return Scalar(Value(std::move(c)));
}

Scalar Scalar::rational(long long num, long long den) {
  if (den == 0) throw GeometryError(ErrorKind::DivisionByZero, "zero denominator");
  mpq_class q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  return Scalar(Value(std::move(q)));
}

Scalar Scalar::residue(long long value, std::uint32_t modulus) {
  return Scalar(Value(Residue{reduce(value, modulus), modulus}));
}

Scalar Scalar::quaternion(const mpq_class& a, const mpq_class& b, const mpq_class& c,
                          const mpq_class& d) {
  Quaternion q{a, b, c, d};
  q.a.canonicalize();
  q.b.canonicalize();
  q.c.canonicalize();
  q.d.canonicalize();
  return Scalar(Value(std::move(q)));
}

Scalar Scalar::parse(const RingDescriptor& ring, std::string_view text) {
  switch (ring.kind()) {
    case RingKind::Rational: return rational(parse_rational_text(text));
    case RingKind::PrimeField: {
      std::string s = strip_spaces(text);
      auto mod_at = s.find("mod");
      if (mod_at != std::string::npos) {
        std::string modulus = s.substr(mod_at + 3);
        s.resize(mod_at);
        if (modulus != std::to_string(ring.modulus())) {
          parse_fail(text, "modulus does not match " + ring.name());
        }
      }
      mpq_class q = parse_rational_text(s);
      mpz_class p(ring.modulus());
      mpz_class num = q.get_num() % p;
      mpz_class den = q.get_den() % p;
      if (den == 0) parse_fail(text, "denominator vanishes mod " + std::to_string(ring.modulus()));
      Scalar n = residue(num.get_si(), ring.modulus());
      Scalar d = residue(den.get_si(), ring.modulus());
      return n * d.inverse();
    }
    case RingKind::RationalQuaternion: {
      Quaternion q = parse_quaternion_text(text);
      return quaternion(q.a, q.b, q.c, q.d);
    }
  }
  parse_fail(text, "unknown ring");
}

RingDescriptor Scalar::ring() const {
  switch (value_.index()) {
    case 0: return RingDescriptor::rational();
    case 1: return RingDescriptor(RingKind::PrimeField, std::get<Residue>(value_).modulus);
    default: return RingDescriptor::quaternion();
  }
}

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, mpq_class>) {
          return v == 0;
        } else if constexpr (std::is_same_v<T, Residue>) {
          return v.value == 0;
        } else {
          return v.a == 0 && v.b == 0 && v.c == 0 && v.d == 0;
        }
      },
      value_);
}

bool Scalar::is_one() const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, mpq_class>) {
          return v == 1;
        } else if constexpr (std::is_same_v<T, Residue>) {
          return v.value == 1 % v.modulus;
        } else {
          return v.a == 1 && v.b == 0 && v.c == 0 && v.d == 0;
        }
      },
      value_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw GeometryError(ErrorKind::DivisionByZero, "inverse of zero");
  switch (value_.index()) {
    case 0: {
      mpq_class q = 1 / std::get<mpq_class>(value_);
      return rational(q);
    }
    case 1: {
      const auto& r = std::get<Residue>(value_);
      return Scalar(Value(Residue{mod_inverse(r.value, r.modulus), r.modulus}));
    }
    default: {
      // conjugate divided by the norm
      const auto& q = std::get<Quaternion>(value_);
      mpq_class norm = q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d;
      return quaternion(q.a / norm, -q.b / norm, -q.c / norm, -q.d / norm);
    }
  }
}

const mpq_class& Scalar::as_rational() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw GeometryError(ErrorKind::RingMismatch, "expected a rational, got " + ring().name());
}

const Scalar::Residue& Scalar::as_residue() const {
  if (auto* r = std::get_if<Residue>(&value_)) return *r;
  throw GeometryError(ErrorKind::RingMismatch, "expected a residue, got " + ring().name());
}

const Scalar::Quaternion& Scalar::as_quaternion() const {
  if (auto* q = std::get_if<Quaternion>(&value_)) return *q;
  throw GeometryError(ErrorKind::RingMismatch, "expected a quaternion, got " + ring().name());
}

double Scalar::to_double() const { return as_rational().get_d(); }

std::string Scalar::to_string() const {
  switch (value_.index()) {
    case 0: return rational_text(std::get<mpq_class>(value_));
    case 1: {
      const auto& r = std::get<Residue>(value_);
      return std::to_string(r.value) + " mod " + std::to_string(r.modulus);
    }
    default: {
      const auto& q = std::get<Quaternion>(value_);
      std::string out = rational_text(q.a);
      auto term = [&out](const mpq_class& v, char unit) {
        if (v >= 0) out += '+';
        out += rational_text(v);
        out += unit;
      };
      term(q.b, 'i');
      term(q.c, 'j');
      term(q.d, 'k');
      return out;
    }
  }
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) check_same(a.ring(), b.ring());
  switch (a.value_.index()) {
    case 0: return Scalar(Scalar::Value(mpq_class(std::get<0>(a.value_) + std::get<0>(b.value_))));
    case 1: {
      const auto& x = std::get<1>(a.value_);
      const auto& y = std::get<1>(b.value_);
      if (x.modulus != y.modulus) check_same(a.ring(), b.ring());
      std::uint64_t s = std::uint64_t{x.value} + y.value;
      return Scalar(Scalar::Value(
          Scalar::Residue{static_cast<std::uint32_t>(s % x.modulus), x.modulus}));
    }
    default: {
      const auto& x = std::get<2>(a.value_);
      const auto& y = std::get<2>(b.value_);
      return Scalar(Scalar::Value(Scalar::Quaternion{x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}));
    }
  }
}

Scalar operator-(const Scalar& a) {
  switch (a.value_.index()) {
    case 0: return Scalar(Scalar::Value(mpq_class(-std::get<0>(a.value_))));
    case 1: {
      const auto& x = std::get<1>(a.value_);
      return Scalar(Scalar::Value(
          Scalar::Residue{x.value == 0 ? 0u : x.modulus - x.value, x.modulus}));
    }
    default: {
      const auto& x = std::get<2>(a.value_);
      return Scalar(Scalar::Value(Scalar::Quaternion{-x.a, -x.b, -x.c, -x.d}));
    }
  }
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) check_same(a.ring(), b.ring());
  switch (a.value_.index()) {
    case 0: return Scalar(Scalar::Value(mpq_class(std::get<0>(a.value_) * std::get<0>(b.value_))));
    case 1: {
      const auto& x = std::get<1>(a.value_);
      const auto& y = std::get<1>(b.value_);
      if (x.modulus != y.modulus) check_same(a.ring(), b.ring());
      std::uint64_t s = std::uint64_t{x.value} * y.value;
      return Scalar(Scalar::Value(
          Scalar::Residue{static_cast<std::uint32_t>(s % x.modulus), x.modulus}));
    }
    default: {
      const auto& x = std::get<2>(a.value_);
      const auto& y = std::get<2>(b.value_);
      Scalar::Quaternion r;
      r.a = x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d;
      r.b = x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c;
      r.c = x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b;
      r.d = x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a;
      return Scalar(Scalar::Value(std::move(r)));
    }
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  switch (a.value_.index()) {
    case 0: return std::get<0>(a.value_) == std::get<0>(b.value_);
    case 1: {
      const auto& x = std::get<1>(a.value_);
      const auto& y = std::get<1>(b.value_);
      return x.value == y.value && x.modulus == y.modulus;
    }
    default: return quaternion_equal(std::get<2>(a.value_), std::get<2>(b.value_));
  }
}

Ordering compare(const Scalar& a, const Scalar& b) {
  const auto ring = check_same(a.ring(), b.ring());
  if (!ring.ordered()) {
    throw GeometryError(ErrorKind::OrderUnavailable, ring.name() + " has no compatible order");
  }
  int c = cmp(a.as_rational(), b.as_rational());
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return Ordering::Equal;
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  auto ra = a.ring();
  auto rb = b.ring();
  if (!(ra == rb)) {
    if (ra.kind() != rb.kind()) return ra.kind() < rb.kind();
    return ra.modulus() < rb.modulus();
  }
  switch (ra.kind()) {
    case RingKind::Rational: return a.as_rational() < b.as_rational();
    case RingKind::PrimeField: return a.as_residue().value < b.as_residue().value;
    case RingKind::RationalQuaternion: {
      const auto& x = a.as_quaternion();
      const auto& y = b.as_quaternion();
      if (x.a != y.a) return x.a < y.a;
      if (x.b != y.b) return x.b < y.b;
      if (x.c != y.c) return x.c < y.c;
      return x.d < y.d;
    }
  }
  return false;
}

}  // namespace skewline
