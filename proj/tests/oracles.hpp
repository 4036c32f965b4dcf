#pragma once

// Reference arithmetic used as test oracles. Deliberately independent of the
// library: machine integers only, no GMP.

#include <cstdint>
#include <numeric>
#include <string>

namespace oracle {

inline long long mod(long long a, long long p) { return ((a % p) + p) % p; }

// Inverse by brute force search.
inline long long mod_inverse(long long a, long long p) {
  for (long long x = 1; x < p; ++x) {
    if (mod(a * x, p) == 1) return x;
  }
  return 0;
}

struct Frac {
  long long n = 0;
  long long d = 1;

  Frac() = default;
  Frac(long long num, long long den = 1) : n(num), d(den) {
    if (d < 0) n = -n, d = -d;
    const long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) n /= g, d /= g;
  }
  friend Frac operator+(Frac a, Frac b) { return {a.n * b.d + b.n * a.d, a.d * b.d}; }
  friend Frac operator-(Frac a, Frac b) { return {a.n * b.d - b.n * a.d, a.d * b.d}; }
  friend Frac operator*(Frac a, Frac b) { return {a.n * b.n, a.d * b.d}; }
  friend Frac operator/(Frac a, Frac b) { return {a.n * b.d, a.d * b.n}; }
  friend bool operator==(Frac a, Frac b) { return a.n == b.n && a.d == b.d; }
  bool positive() const { return n > 0; }

  std::string str() const { return d == 1 ? std::to_string(n) : std::to_string(n) + "/" + std::to_string(d); }
};

// Integer quaternion a + bi + cj + dk with the Hamilton product written out
// from i^2 = j^2 = k^2 = ijk = -1.
struct Quat {
  long a = 0, b = 0, c = 0, d = 0;

  friend Quat operator*(const Quat& x, const Quat& y) {
    return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d, x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
            x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b, x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
  }
  friend Quat operator+(const Quat& x, const Quat& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
  friend bool operator==(const Quat&, const Quat&) = default;

  std::string str() const {
    return std::to_string(a) + (b < 0 ? "" : "+") + std::to_string(b) + "i" + (c < 0 ? "" : "+") +
           std::to_string(c) + "j" + (d < 0 ? "" : "+") + std::to_string(d) + "k";
  }
};

}  // namespace oracle
