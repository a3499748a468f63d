#include <gtest/gtest.h>

#include <random>

#include "hrp/errors.hpp"
#include "hrp/json_io.hpp"
#include "support.hpp"

using namespace hrp;
using hrp::test::Fixture;
using hrp::test::M;

TEST(Json, Integers) {
  EXPECT_EQ(integer_json(Integer(-7)).dump(), "-7");
  const Integer big("123456789012345678901234567890");
  EXPECT_EQ(integer_json(big).dump(), "\"123456789012345678901234567890\"");
  EXPECT_EQ(integer_from_json(integer_json(big)), big);
  EXPECT_EQ(integer_from_json(integer_json(-big)), -big);
  EXPECT_EQ(integer_from_json(Json(42)), 42);
  EXPECT_THROW(integer_from_json(Json("4x")), InputError);
  EXPECT_THROW(integer_from_json(Json(1.5)), InputError);
}

TEST(Json, Rationals) {
  EXPECT_EQ(rational_from_json(Json("-3/6")), Rational(-1, 2));
  EXPECT_EQ(rational_from_json(Json(5)), Rational(5));
}

TEST(Json, Polynomials) {
  const IntPoly p{3, 0, -2};
  EXPECT_EQ(coeffs_json(p).dump(), "[3,0,-2]");
  EXPECT_EQ(intpoly_json(p).dump(), R"({"coeffs":[3,0,-2]})");
  EXPECT_EQ(intpoly_from_json(coeffs_json(p)), p);
  EXPECT_EQ(intpoly_from_json(intpoly_json(p)), p);
  EXPECT_EQ(intpoly_from_json(Json::parse(R"({"coeffs":[1,"-2"]})")), (IntPoly{1, -2}));
  EXPECT_EQ(minpoly_from_json(minpoly_json(M({2, -2, 1}))), M({2, -2, 1}));
  EXPECT_THROW(minpoly_from_json(Json::parse("[1,2]")), InputError);
  EXPECT_THROW(intpoly_from_json(Json::parse(R"({"coeffs":3})")), InputError);
}

TEST(Json, DigitSetRoundTrip) {
  for (const MinPoly& m : {M({-2, 1}), M({-3, 2}), M({2, -2, 1}), M({5, -6, 5}), M({-2, -2, 0, 1})}) {
    const Fixture f(m);
    const Json j = digit_set_json(f.F);
    const DigitSet back = digit_set_from_json(Json::parse(dump(j)), *f.emb);
    ASSERT_EQ(back.size(), f.F.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
      EXPECT_EQ(back[i].rep, f.F[i].rep);
      EXPECT_EQ(back[i].orthant, f.F[i].orthant);
      EXPECT_EQ(back[i].coset, f.F[i].coset);
    }
    EXPECT_EQ(dump(digit_set_json(back)), dump(j));
    EXPECT_EQ(j.at("card").get<std::size_t>(), f.F.size());
  }
}

TEST(Json, DigitSetRejectsTampering) {
  const Fixture f(M({-2, 1}));
  Json j = digit_set_json(f.F);
  Json wrong_orthant = j;
  wrong_orthant["digits"][0]["orthant"] = j["digits"][0]["orthant"] == "+" ? "-" : "+";
  EXPECT_THROW(digit_set_from_json(wrong_orthant, *f.emb), InputError);
  Json wrong_coset = j;
  wrong_coset["digits"][0]["coset"] = 1 - j["digits"][0]["coset"].get<int>();
  EXPECT_THROW(digit_set_from_json(wrong_coset, *f.emb), InputError);
  Json duplicate = j;
  duplicate["digits"].push_back(j["digits"][0]);
  EXPECT_THROW(digit_set_from_json(duplicate, *f.emb), InputError);
  Json other = j;
  other["alpha"] = minpoly_json(M({-3, 1}));
  EXPECT_THROW(digit_set_from_json(other, *f.emb), InputError);
  EXPECT_THROW(digit_set_from_json(Json::parse("{}"), *f.emb), InputError);
}

TEST(Json, TraceRoundTrip) {
  const Fixture f(M({5, -6, 5}));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const ExpansionTrace t = f.ex.expand(test::random_poly(rng, 4, 10));
    const AuditReport audit = audit_trace(t, f.F, *f.emb);
    const Json j = trace_json(t, f.F, audit);
    const ExpansionTrace back = trace_from_json(Json::parse(dump(j)));
    EXPECT_EQ(back.beta0, t.beta0);
    EXPECT_EQ(back.digits_out, t.digits_out);
    EXPECT_EQ(back.tail, t.tail);
    EXPECT_EQ(back.status, t.status);
    EXPECT_EQ(back.cycle_entry, t.cycle_entry);
    EXPECT_EQ(back.cycle_period, t.cycle_period);
    ASSERT_EQ(back.steps.size(), t.steps.size());
    for (std::size_t k = 0; k < t.steps.size(); ++k) {
      EXPECT_EQ(back.steps[k].beta, t.steps[k].beta);
      EXPECT_EQ(back.steps[k].digit, t.steps[k].digit);
    }
    EXPECT_EQ(audit_trace(back, f.F, *f.emb).passed(), audit.passed());
    EXPECT_TRUE(j.at("verdict").at("recomposition").get<bool>());
  }
}

TEST(Json, TraceRejectsBadStatus) {
  EXPECT_THROW(trace_from_json(Json::parse(R"({"beta0":[1],"status":"done","digits":[]})")), InputError);
  EXPECT_THROW(trace_from_json(Json::parse("[]")), InputError);
}

TEST(Json, Deterministic) {
  const Fixture f1(M({-2, -2, 0, 1}));
  const Fixture f2(M({-2, -2, 0, 1}));
  EXPECT_EQ(dump(digit_set_json(f1.F)), dump(digit_set_json(f2.F)));
  const ExpansionTrace t1 = f1.ex.expand(IntPoly{9, -4, 7});
  const ExpansionTrace t2 = f2.ex.expand(IntPoly{9, -4, 7});
  EXPECT_EQ(dump(trace_json(t1, f1.F, audit_trace(t1, f1.F, *f1.emb))),
            dump(trace_json(t2, f2.F, audit_trace(t2, f2.F, *f2.emb))));
  const Attractor A1 = attractor(f1.ex, SeedBox::symmetric(3), kDefaultMaxSteps, 1);
  const Attractor A2 = attractor(f2.ex, SeedBox::symmetric(3), kDefaultMaxSteps, 3);
  EXPECT_EQ(dump(attractor_json(A1, f1.F.alpha(), SeedBox::symmetric(3), kDefaultMaxSteps)),
            dump(attractor_json(A2, f2.F.alpha(), SeedBox::symmetric(3), kDefaultMaxSteps)));
}

TEST(Json, CoverageMisses) {
  const AlgebraicNumber a = analyze(M({-2, 1}));
  const CoverageReport r = coverage({IntPoly{0}, IntPoly{1}}, a, coefficient_box(1, -2, 1), 4, kWordGuard, "box");
  const Json j = coverage_json(r, a.minpoly());
  EXPECT_FALSE(j.at("covered").get<bool>());
  EXPECT_EQ(j.at("misses").dump(), R"([["-2"],["-1"]])");
  EXPECT_EQ(j.at("region").get<std::string>(), "box");
}
