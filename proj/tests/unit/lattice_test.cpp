#include <gtest/gtest.h>

#include "hrp/lattice.hpp"

using namespace hrp;

namespace {
IntVector V(std::initializer_list<long> xs) { return IntVector(xs.begin(), xs.end()); }
}  // namespace

TEST(Hermite, EchelonForm) {
  const HermiteBasis b = hermite_normal_form({V({2, 4}), V({3, 5})}, 2);
  ASSERT_EQ(b.rows.size(), 2u);
  // the lattice is Z (1, ?) + Z (0, 2): determinant |2*5 - 4*3| = 2
  EXPECT_EQ(b.rows[0][0] * b.rows[1][1], 2);
  EXPECT_TRUE(b.rows[1][0] == 0);
}

TEST(Hermite, Membership) {
  const HermiteBasis b = hermite_normal_form({V({2, 0}), V({0, 3})}, 2);
  EXPECT_TRUE(lattice_contains(b, V({4, -9})));
  EXPECT_FALSE(lattice_contains(b, V({1, 0})));
  EXPECT_FALSE(lattice_contains(b, V({2, 1})));
  EXPECT_TRUE(lattice_contains(b, V({0, 0})));
}

TEST(Hermite, RankDeficient) {
  const HermiteBasis b = hermite_normal_form({V({1, 2, 3}), V({2, 4, 6})}, 3);
  EXPECT_EQ(b.rows.size(), 1u);
  EXPECT_TRUE(lattice_contains(b, V({-3, -6, -9})));
  EXPECT_FALSE(lattice_contains(b, V({1, 2, 4})));
}

TEST(Hermite, BruteForceAgreement) {
  // lattice spanned by (3, 1) and (1, 2): index 5 in Z^2
  const HermiteBasis b = hermite_normal_form({V({3, 1}), V({1, 2})}, 2);
  for (long x = -6; x <= 6; ++x)
    for (long y = -6; y <= 6; ++y) {
      bool brute = false;
      for (long s = -20; s <= 20 && !brute; ++s)
        for (long t = -20; t <= 20 && !brute; ++t) brute = 3 * s + t == x && s + 2 * t == y;
      EXPECT_EQ(lattice_contains(b, V({x, y})), brute) << x << "," << y;
    }
}
