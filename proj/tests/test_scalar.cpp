#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "skewline/sampling.hpp"
#include "skewline/scalar.hpp"

using namespace skewline;

namespace {

Scalar q(long long a, long long b = 1) { return Scalar::rational(a, b); }
Scalar quat(long a, long b, long c, long d) { return Scalar::quaternion(a, b, c, d); }

}  // namespace

TEST(Scalar, RationalSumMatchesFractionOracle) {
  const oracle::Frac expect = oracle::Frac(1, 2) + oracle::Frac(1, 3);
  EXPECT_EQ((q(1, 2) + q(1, 3)).to_string(), expect.str());
  EXPECT_EQ((q(1, 2) + q(1, 3)).to_string(), "5/6");
}

TEST(Scalar, RationalLowestTerms) {
  EXPECT_EQ(q(4, 8).to_string(), "1/2");
  EXPECT_EQ(q(3, -6).to_string(), "-1/2");
  EXPECT_EQ(q(6, 3).to_string(), "2");
}

TEST(Scalar, AdditiveAndMultiplicativeIdentity) {
  const auto r = RingDescriptor::rational();
  const Scalar x = q(-7, 3);
  EXPECT_EQ(x + Scalar::zero(r), x);
  EXPECT_EQ(x * Scalar::one(r), x);
  const Scalar h = quat(1, -2, 3, 5);
  EXPECT_EQ(h * Scalar::one(RingDescriptor::quaternion()), h);
}

TEST(Scalar, PrimeFieldSum) {
  EXPECT_EQ(Scalar::residue(2, 5) + Scalar::residue(4, 5), Scalar::residue(oracle::mod(2 + 4, 5), 5));
  EXPECT_EQ((Scalar::residue(2, 5) + Scalar::residue(4, 5)).to_string(), "1 mod 5");
}

TEST(Scalar, QuaternionUnitsMatchHamiltonTable) {
  const oracle::Quat i{0, 1, 0, 0}, j{0, 0, 1, 0};
  const oracle::Quat ij = i * j, ji = j * i;
  EXPECT_EQ(quat(0, 1, 0, 0) * quat(0, 0, 1, 0), quat(ij.a, ij.b, ij.c, ij.d));
  EXPECT_EQ(quat(0, 0, 1, 0) * quat(0, 1, 0, 0), quat(ji.a, ji.b, ji.c, ji.d));
  EXPECT_EQ((quat(0, 1, 0, 0) * quat(0, 0, 1, 0)).to_string(), "0+0i+0j+1k");
  EXPECT_EQ((quat(0, 0, 1, 0) * quat(0, 1, 0, 0)).to_string(), "0+0i+0j-1k");
}

TEST(Scalar, QuaternionProductMatchesOracleOnRandomIntegers) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int n = 0; n < 300; ++n) {
    const oracle::Quat x{d(rng), d(rng), d(rng), d(rng)}, y{d(rng), d(rng), d(rng), d(rng)};
    const oracle::Quat p = x * y;
    EXPECT_EQ(quat(x.a, x.b, x.c, x.d) * quat(y.a, y.b, y.c, y.d), quat(p.a, p.b, p.c, p.d)) << x.str() << " " << y.str();
  }
}

TEST(Scalar, Inverses) {
  EXPECT_EQ(q(2, 3).inverse(), q(3, 2));
  EXPECT_EQ(Scalar::residue(3, 7).inverse(), Scalar::residue(oracle::mod_inverse(3, 7), 7));
  EXPECT_EQ(Scalar::residue(3, 7).inverse(), Scalar::residue(5, 7));
  EXPECT_EQ(quat(0, 1, 0, 0).inverse(), quat(0, -1, 0, 0));
}

TEST(Scalar, ZeroHasNoInverse) {
  for (const auto& ring : {RingDescriptor::rational(), RingDescriptor::prime_field(5), RingDescriptor::quaternion()}) {
    try {
      Scalar::zero(ring).inverse();
      FAIL() << ring.name();
    } catch (const GeometryError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
    }
  }
}

TEST(Scalar, InverseTwoSidedExhaustiveSmallPrimes) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (long long a = 1; a < p; ++a) {
      const Scalar x = Scalar::residue(a, p);
      const Scalar inv = x.inverse();
      EXPECT_EQ(inv, Scalar::residue(oracle::mod_inverse(a, p), p));
      EXPECT_TRUE((x * inv).is_one());
      EXPECT_TRUE((inv * x).is_one());
    }
  }
}

TEST(Scalar, InverseTwoSidedRandomized) {
  for (const auto& ring : {RingDescriptor::rational(), RingDescriptor::quaternion()}) {
    Sampler s(ring, 5);
    for (int n = 0; n < 200; ++n) {
      const Scalar x = s.nonzero_scalar();
      EXPECT_TRUE((x * x.inverse()).is_one()) << x.to_string();
      EXPECT_TRUE((x.inverse() * x).is_one()) << x.to_string();
    }
  }
}

TEST(Scalar, RingLawsRandomized) {
  for (const auto& ring : {RingDescriptor::rational(), RingDescriptor::prime_field(7), RingDescriptor::quaternion()}) {
    Sampler s(ring, 9);
    for (int n = 0; n < 200; ++n) {
      const Scalar a = s.scalar(), b = s.scalar(), c = s.scalar();
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((b + c) * a, b * a + c * a);
      if (ring.commutative()) EXPECT_EQ(a * b, b * a);
    }
  }
}

TEST(Scalar, PrimeFieldMatchesModularOracleExhaustive) {
  const std::uint32_t p = 11;
  for (long long a = 0; a < p; ++a) {
    for (long long b = 0; b < p; ++b) {
      EXPECT_EQ(Scalar::residue(a, p) + Scalar::residue(b, p), Scalar::residue(oracle::mod(a + b, p), p));
      EXPECT_EQ(Scalar::residue(a, p) * Scalar::residue(b, p), Scalar::residue(oracle::mod(a * b, p), p));
      EXPECT_EQ(Scalar::residue(a, p) - Scalar::residue(b, p), Scalar::residue(oracle::mod(a - b, p), p));
    }
  }
}

TEST(Scalar, Compare) {
  EXPECT_EQ(compare(q(1, 3), q(1, 2)), Ordering::Less);
  EXPECT_EQ(compare(q(5, 7), q(5, 7)), Ordering::Equal);
  EXPECT_EQ(compare(q(-1), q(0)), Ordering::Less);
  try {
    compare(Scalar::residue(1, 5), Scalar::residue(2, 5));
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderUnavailable);
  }
  EXPECT_THROW(compare(quat(1, 0, 0, 0), quat(0, 1, 0, 0)), GeometryError);
}

TEST(Scalar, RingMismatch) {
  try {
    (void)(q(1) + Scalar::residue(1, 5));
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RingMismatch);
  }
  EXPECT_THROW((void)(Scalar::residue(1, 5) * Scalar::residue(1, 7)), GeometryError);
}

TEST(RingDescriptor, Flags) {
  EXPECT_TRUE(RingDescriptor::rational().ordered());
  EXPECT_FALSE(RingDescriptor::prime_field(5).ordered());
  EXPECT_FALSE(RingDescriptor::quaternion().ordered());
  EXPECT_FALSE(RingDescriptor::quaternion().commutative());
  EXPECT_TRUE(RingDescriptor::prime_field(3).finite());
}

TEST(RingDescriptor, PrimalityChecked) {
  try {
    RingDescriptor::prime_field(4);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidRing);
    EXPECT_EQ(e.detail(), "4 is not prime");
  }
  EXPECT_THROW(RingDescriptor::prime_field(1), GeometryError);
  EXPECT_NO_THROW(RingDescriptor::prime_field(13));
}

TEST(RingDescriptor, Parse) {
  EXPECT_EQ(RingDescriptor::parse("rational"), RingDescriptor::rational());
  EXPECT_EQ(RingDescriptor::parse("gf(5)"), RingDescriptor::prime_field(5));
  EXPECT_EQ(RingDescriptor::parse("quaternion"), RingDescriptor::quaternion());
  EXPECT_THROW(RingDescriptor::parse("gf(9)"), GeometryError);
  EXPECT_THROW(RingDescriptor::parse("reals"), GeometryError);
}

TEST(Scalar, ParseCanonicalForms) {
  const auto r = RingDescriptor::rational();
  const auto h = RingDescriptor::quaternion();
  const auto f = RingDescriptor::prime_field(7);
  EXPECT_EQ(Scalar::parse(r, "-3/4"), q(-3, 4));
  EXPECT_EQ(Scalar::parse(r, "6/8"), q(3, 4));
  EXPECT_EQ(Scalar::parse(f, "3 mod 7"), Scalar::residue(3, 7));
  EXPECT_EQ(Scalar::parse(f, "10"), Scalar::residue(3, 7));
  EXPECT_EQ(Scalar::parse(h, "1+2i+0j+3k"), quat(1, 2, 0, 3));
  EXPECT_EQ(Scalar::parse(h, "-i"), quat(0, -1, 0, 0));
  EXPECT_EQ(Scalar::parse(h, "1/2+j"), Scalar::quaternion(mpq_class(1, 2), 0, 1, 0));
  EXPECT_THROW(Scalar::parse(r, "1/0"), GeometryError);
  EXPECT_THROW(Scalar::parse(r, "abc"), GeometryError);
  EXPECT_THROW(Scalar::parse(f, "3 mod 5"), GeometryError);
}

TEST(Scalar, TextRoundTrip) {
  for (const auto& ring : {RingDescriptor::rational(), RingDescriptor::prime_field(13), RingDescriptor::quaternion()}) {
    Sampler s(ring, 3);
    for (int n = 0; n < 100; ++n) {
      const Scalar x = s.scalar();
      EXPECT_EQ(Scalar::parse(ring, x.to_string()), x) << x.to_string();
    }
  }
}

TEST(Scalar, ArbitraryPrecision) {
  Scalar x = q(3, 2);
  for (int n = 0; n < 2000; ++n) x = x * q(3, 2);
  EXPECT_GT(x.to_string().size(), 1000u);
  EXPECT_EQ(compare(x, q(1)), Ordering::Greater);
}
