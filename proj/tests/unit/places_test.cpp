#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hrp/errors.hpp"
#include "hrp/places.hpp"
#include "support.hpp"

using namespace hrp;
using hrp::test::M;

namespace {

bool ball_contains(const ComplexBall& b, const Rational& re, const Rational& im) {
  const Rational dr = b.re - re, di = b.im - im;
  return dr * dr + di * di <= b.radius * b.radius;
}

bool overlap(const Interval& a, const Interval& b) { return a.lo <= b.hi && b.lo <= a.hi; }

}  // namespace

TEST(Analyze, GaussianUnit) {
  const AlgebraicNumber a = analyze(M({1, 0, 1}));
  EXPECT_EQ(a.r(), 0);
  EXPECT_EQ(a.s(), 1);
  EXPECT_EQ(a.roots().size(), 2u);
  const RootDisk& z = a.conjugate(0);
  EXPECT_TRUE(ball_contains({z.center_re(), z.center_im(), z.radius}, 0, 1));
}

TEST(Analyze, OnePlusI) {
  const AlgebraicNumber a = analyze(M({2, -2, 1}));
  EXPECT_EQ(a.r(), 0);
  EXPECT_EQ(a.s(), 1);
  const RootDisk& z = a.conjugate(0);
  EXPECT_TRUE(ball_contains({z.center_re(), z.center_im(), z.radius}, 1, 1));
}

TEST(Analyze, ThreeFourFifths) {
  const AlgebraicNumber a = analyze(M({5, -6, 5}));
  const RootDisk& z = a.conjugate(0);
  EXPECT_TRUE(ball_contains({z.center_re(), z.center_im(), z.radius}, Rational(3, 5), Rational(4, 5)));
  EXPECT_LE(z.radius, ldexp(Rational(1), -static_cast<long>(kDefaultPrecision)));
}

TEST(Analyze, SignatureAndOrdering) {
  const AlgebraicNumber a = analyze(M({-2, -2, 0, 1}));
  EXPECT_EQ(a.r(), 1);
  EXPECT_EQ(a.s(), 1);
  EXPECT_EQ(a.kind(0), PlaceKind::Real);
  EXPECT_EQ(a.kind(1), PlaceKind::Complex);
  EXPECT_GT(a.conjugate(1).im, 0);
  const AlgebraicNumber b = analyze(M({1, 0, 0, 0, 1}));  // x^4 + 1
  EXPECT_EQ(b.s(), 2);
  EXPECT_LT(b.conjugate(0).center_re(), b.conjugate(1).center_re());
}

TEST(Analyze, RefinementShrinks) {
  const AlgebraicNumber a = analyze(M({-2, -2, 0, 1}), 64).refined(512);
  EXPECT_EQ(a.precision(), 512u);
  for (std::size_t v = 0; v < a.place_count(); ++v) EXPECT_LE(a.conjugate(v).radius, ldexp(Rational(1), -512));
}

TEST(Classify, RegressionSet) {
  struct Case {
    MinPoly m;
    ModulusKind kind;
    bool root_of_unity;
  };
  const std::vector<Case> cases = {
      {M({-1, -1, 1}), ModulusKind::SomeInside, false},
      {M({1, -3, 1}), ModulusKind::SomeInside, false},
      {M({5, -6, 5}), ModulusKind::AllUnitModulus, false},
      {M({1, 0, 1}), ModulusKind::AllUnitModulus, true},
      {M({2, -2, 1}), ModulusKind::AllExpanding, false},
      {M({-3, 2}), ModulusKind::AllExpanding, false},
      {M({-2, 1}), ModulusKind::AllExpanding, false},
      {M({-2, -2, 0, 1}), ModulusKind::AllExpanding, false},
      {M({-1, -1, 0, 1}), ModulusKind::SomeInside, false},  // plastic number
      {M({1, 1, 1, 1, 1}), ModulusKind::AllUnitModulus, true},
      {M({1, -1, 1, -1, 1}), ModulusKind::AllUnitModulus, true},
      {M({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}), ModulusKind::SomeInside, false},  // Lehmer
      {M({-1, 1}), ModulusKind::AllUnitModulus, true},
      {M({1, 1}), ModulusKind::AllUnitModulus, true},
      {M({1, 2}), ModulusKind::SomeInside, false},
      {M({2, 0, 1}), ModulusKind::AllExpanding, false},
  };
  for (const auto& c : cases) {
    const Classification got = classify(analyze(c.m));
    EXPECT_EQ(got.kind, c.kind) << c.m.poly().to_string();
    if (c.kind == ModulusKind::AllUnitModulus) EXPECT_EQ(got.is_root_of_unity, c.root_of_unity) << c.m.poly().to_string();
  }
}

TEST(Classify, EulerPhiBound) {
  EXPECT_EQ(max_cyclotomic_order(1), 2u);
  EXPECT_EQ(max_cyclotomic_order(2), 6u);
  EXPECT_EQ(max_cyclotomic_order(4), 12u);
}

TEST(Classify, SelfReciprocal) {
  EXPECT_TRUE(is_self_reciprocal(M({5, -6, 5})));
  EXPECT_TRUE(is_self_reciprocal(M({1, -1, 1, -1, 1})));
  EXPECT_TRUE(is_self_reciprocal(M({-1, 1})));  // a_j = -a_{n-j}
  EXPECT_FALSE(is_self_reciprocal(M({2, -2, 1})));
}

TEST(Embed, Identity) {
  const AlgebraicNumber a = analyze(M({2, -2, 1}));
  const EmbeddingPoint e = embed(IntPoly{0, 1}, a);
  ASSERT_EQ(e.complexes.size(), 1u);
  EXPECT_TRUE(ball_contains(e.complexes[0], 1, 1));
}

TEST(Embed, Constant) {
  const EmbeddingPoint e = embed(IntPoly{3}, analyze(M({-2, 1})));
  ASSERT_EQ(e.reals.size(), 1u);
  EXPECT_TRUE(ball_contains(e.reals[0], 3, 0));
}

TEST(Embed, ShiftedGaussian) {
  const EmbeddingPoint e = embed(IntPoly{-1, 1}, analyze(M({2, -2, 1})), 200);
  EXPECT_TRUE(ball_contains(e.complexes[0], 0, 1));
  EXPECT_LE(e.complexes[0].radius, ldexp(Rational(1), -200));
}

TEST(PlaceAbs, SpecExamples) {
  EXPECT_TRUE(place_abs(IntPoly{0, 1}, analyze(M({2, -2, 1})), 0).contains(2));
  EXPECT_TRUE(place_abs(IntPoly{-5}, analyze(M({-2, 1})), 0).contains(5));
  EXPECT_TRUE(place_abs(IntPoly{0, 1}, analyze(M({5, -6, 5})), 0).contains(1));
}

TEST(PlaceAbs, Multiplicative) {
  std::mt19937_64 rng(11);
  for (const MinPoly& m : {M({2, -2, 1}), M({-2, -2, 0, 1}), M({5, -6, 5})}) {
    const AlgebraicNumber a = analyze(m);
    for (int i = 0; i < 30; ++i) {
      const IntPoly p = test::random_poly(rng, 4, 9), q = test::random_poly(rng, 4, 9);
      if (to_field(p, m).is_zero() || to_field(q, m).is_zero()) continue;
      for (std::size_t v = 0; v < a.place_count(); ++v) {
        const Interval pq = place_abs(p * q, a, v);
        const Interval prod = place_abs(p, a, v) * place_abs(q, a, v);
        EXPECT_TRUE(overlap(pq, prod));
      }
    }
  }
}

TEST(PlaceAbs, UnitModulusContainsOne) {
  for (const MinPoly& m : {M({5, -6, 5}), M({1, 0, 1}), M({1, 1, 1, 1, 1}), M({1, -1, 1, -1, 1})}) {
    const AlgebraicNumber a = analyze(m);
    ASSERT_EQ(classify(a).kind, ModulusKind::AllUnitModulus);
    for (std::size_t v = 0; v < a.place_count(); ++v) EXPECT_TRUE(place_abs(IntPoly{0, 1}, a, v).contains(1));
  }
}

TEST(Embed, InjectiveOnSamples) {
  std::mt19937_64 rng(12);
  const MinPoly m = M({-2, -2, 0, 1});
  const AlgebraicNumber a = analyze(m);
  std::vector<std::pair<FieldElem, EmbeddingPoint>> seen;
  for (int i = 0; i < 100; ++i) {
    std::vector<Integer> c(3);
    std::uniform_int_distribution<long> d(-5, 5);
    for (auto& x : c) x = d(rng);
    const IntPoly p(c);
    seen.emplace_back(to_field(p, m), embed(p, a));
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (std::size_t j = i + 1; j < seen.size(); ++j) {
      if (seen[i].first == seen[j].first) continue;
      bool separated = false;
      auto apart = [](const ComplexBall& x, const ComplexBall& y) {
        const Rational dr = x.re - y.re, di = x.im - y.im, rr = x.radius + y.radius;
        return dr * dr + di * di > rr * rr;
      };
      for (std::size_t k = 0; k < seen[i].second.reals.size(); ++k)
        separated = separated || apart(seen[i].second.reals[k], seen[j].second.reals[k]);
      for (std::size_t k = 0; k < seen[i].second.complexes.size(); ++k)
        separated = separated || apart(seen[i].second.complexes[k], seen[j].second.complexes[k]);
      EXPECT_TRUE(separated);
    }
}

TEST(PlaceTable, RejectsLongPolynomials) {
  const PlaceTable t(analyze(M({2, -2, 1})), 3);
  EXPECT_THROW(t.evaluate(IntPoly{0, 0, 0, 0, 1}, 0), std::length_error);
}

TEST(Embedder, ExactZeroCoordinates) {
  const Embedder e(analyze(M({1, 0, 1})), 8);
  EXPECT_EQ(e.complex_signs(IntPoly{0, 1}, 0), std::make_pair(0, 1));
  EXPECT_EQ(e.complex_signs(IntPoly{1}, 0), std::make_pair(1, 0));
  EXPECT_EQ(e.complex_signs(IntPoly{-1, -1}, 0), std::make_pair(-1, -1));
  EXPECT_EQ(e.complex_signs(IntPoly{1, 0, 1, 1}, 0), std::make_pair(0, -1));  // alpha^3 = -i
}

TEST(Embedder, ExactZeroThroughRationalRealPart) {
  const Embedder e(analyze(M({5, -6, 5})), 8);
  EXPECT_EQ(e.complex_signs(IntPoly{-3, 5}, 0), std::make_pair(0, 1));  // 5 alpha - 3 = 4i
  EXPECT_EQ(e.complex_signs(IntPoly{3, -5}, 0), std::make_pair(0, -1));
  EXPECT_EQ(e.complex_signs(IntPoly{-3, 5, 0, 0, 0, 0, 5}, 0).second, 1);
}

TEST(Embedder, RealSubfieldOfEighthRoots) {
  // x^4 + 1; places ordered e^{3 i pi/4}, e^{i pi/4}.
  const Embedder e(analyze(M({1, 0, 0, 0, 1})), 8);
  const IntPoly sqrt2{0, 1, 0, -1};  // alpha - alpha^3
  const IntPoly isqrt2{0, 1, 0, 1};  // alpha + alpha^3
  EXPECT_EQ(e.complex_signs(sqrt2, 0), std::make_pair(-1, 0));
  EXPECT_EQ(e.complex_signs(sqrt2, 1), std::make_pair(1, 0));
  EXPECT_EQ(e.complex_signs(isqrt2, 0), std::make_pair(0, 1));
  EXPECT_EQ(e.complex_signs(isqrt2, 1), std::make_pair(0, 1));
  EXPECT_TRUE(e.is_real_at(sqrt2, 0));
  EXPECT_FALSE(e.is_real_at(isqrt2, 0));
}

TEST(Embedder, RealPlaceSigns) {
  const Embedder e(analyze(M({-2, 0, 1})), 8);  // sqrt 2 at place 1, -sqrt 2 at place 0
  EXPECT_EQ(e.real_sign(IntPoly{0, 1}, 0), -1);
  EXPECT_EQ(e.real_sign(IntPoly{0, 1}, 1), 1);
  EXPECT_EQ(e.real_sign(IntPoly{-2, 0, 1}, 1), 0);
  // 99 - 70 sqrt 2 ~ 0.00505, needs more than a few bits
  EXPECT_EQ(e.real_sign(IntPoly{99, -70}, 1), 1);
  EXPECT_EQ(e.real_sign(IntPoly{-99, 70}, 1), -1);
}
