#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "hrp/roots.hpp"

using namespace hrp;

namespace {

bool disk_contains(const RootDisk& d, long double re, long double im) {
  const long double dr = re - d.approx().real(), di = im - d.approx().imag();
  return std::sqrt(dr * dr + di * di) <= to_long_double(d.radius) + 1e-15L;
}

}  // namespace

TEST(Roots, SqrtTwo) {
  const auto r = isolate_roots(IntPoly{-2, 0, 1}, 64);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_TRUE(r[0].is_real() && r[1].is_real());
  EXPECT_TRUE(disk_contains(r[0], -std::sqrt(2.0L), 0));
  EXPECT_TRUE(disk_contains(r[1], std::sqrt(2.0L), 0));
  // exact check: the enclosure of sqrt 2 brackets it
  const Rational lo = r[1].center_re() - r[1].radius, hi = r[1].center_re() + r[1].radius;
  EXPECT_LT(lo * lo, 2);
  EXPECT_GT(hi * hi, 2);
  EXPECT_LE(r[1].radius, ldexp(Rational(1), -64));
}

TEST(Roots, GaussianPair) {
  const auto r = isolate_roots(IntPoly{2, -2, 1}, 100);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_FALSE(r[0].is_real());
  EXPECT_EQ(r[0].re, r[1].re);
  EXPECT_EQ(r[0].im, -r[1].im);
  EXPECT_LT(r[0].im, 0);  // ordered by (re, im)
  EXPECT_TRUE(disk_contains(r[1], 1, 1));
}

TEST(Roots, ExactRationalRealPart) {
  // 5x^2 - 6x + 5: (3 +- 4i) / 5
  const auto r = isolate_roots(IntPoly{5, -6, 5}, 128);
  ASSERT_EQ(r.size(), 2u);
  const Rational dre = r[1].center_re() - Rational(3, 5), dim = r[1].center_im() - Rational(4, 5);
  EXPECT_LE(dre * dre + dim * dim, r[1].radius * r[1].radius);
}

TEST(Roots, CubicMixedSignature) {
  const auto r = isolate_roots(IntPoly{-2, -2, 0, 1}, 128);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_TRUE(r[0].is_real());
  EXPECT_FALSE(r[1].is_real());
  EXPECT_FALSE(r[2].is_real());
  const long double x = r[0].approx().real();
  EXPECT_NEAR(static_cast<double>(x * x * x - 2 * x - 2), 0.0, 1e-12);
}

TEST(Roots, DisjointAndSmall) {
  // Cyclotomic Phi_12 and a Wilkinson-like real polynomial.
  for (const IntPoly& p : {IntPoly{1, 0, -1, 0, 1}, IntPoly{23, -50, 35, -10, 1}}) {
    const auto r = isolate_roots(p, 80);
    ASSERT_EQ(static_cast<int>(r.size()), p.degree());
    for (std::size_t i = 0; i < r.size(); ++i) {
      EXPECT_LE(r[i].radius, ldexp(Rational(1), -80));
      for (std::size_t j = i + 1; j < r.size(); ++j) {
        const Rational dre = r[i].center_re() - r[j].center_re(), dim = r[i].center_im() - r[j].center_im();
        const Rational rr = r[i].radius + r[j].radius;
        EXPECT_GT(dre * dre + dim * dim, rr * rr);
      }
    }
  }
}

TEST(Roots, RealRootsAscending) {
  const auto r = isolate_roots(IntPoly{-1, -5, 0, 1}, 64);  // three real roots
  ASSERT_EQ(r.size(), 3u);
  for (const auto& d : r) EXPECT_TRUE(d.is_real());
  EXPECT_LT(r[0].center_re(), r[1].center_re());
  EXPECT_LT(r[1].center_re(), r[2].center_re());
}
