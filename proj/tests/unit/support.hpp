#pragma once

#include <initializer_list>
#include <memory>
#include <random>
#include <vector>

#include "hrp/digitset.hpp"
#include "hrp/expander.hpp"
#include "hrp/places.hpp"
#include "hrp/ring.hpp"

namespace hrp::test {

inline MinPoly M(std::initializer_list<long> c) { return MinPoly(IntPoly(c)); }

inline FieldElem Q(std::initializer_list<Rational> c) { return FieldElem(std::vector<Rational>(c)); }

// Gaussian-rational value of a polynomial at alpha = (a + b i) / d, as
// (re, im) numerators over d^deg; exact for desk-scale inputs.
struct Gauss {
  long long re = 0, im = 0;
  friend bool operator==(const Gauss&, const Gauss&) = default;
};

inline Gauss gmul(Gauss x, Gauss y) { return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re}; }

inline IntPoly random_poly(std::mt19937_64& rng, int max_degree, long bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return IntPoly(std::move(c));
}

// Digit set and expander for a fixed alpha, built once per test.
struct Fixture {
  explicit Fixture(const MinPoly& m, std::size_t degree = kDefaultTableDegree)
      : a(analyze(m)),
        emb(std::make_shared<const Embedder>(a, std::max(degree, static_cast<std::size_t>(m.degree())))),
        F(build_digit_set(*emb)),
        ex(F, emb) {}
  AlgebraicNumber a;
  std::shared_ptr<const Embedder> emb;
  DigitSet F;
  Expander ex;
};

}  // namespace hrp::test
