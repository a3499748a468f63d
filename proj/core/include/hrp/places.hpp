#pragma once

// Archimedean places of Q(alpha): certified conjugates, the Minkowski
// embedding into R^r x C^s, place absolute values (|.| at real places,
// |.|^2 at complex ones) and the modulus classification of alpha.

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hrp/intpoly.hpp"
#include "hrp/ring.hpp"
#include "hrp/roots.hpp"

namespace hrp {

inline constexpr unsigned kDefaultPrecision = 128;
inline constexpr unsigned kMaxPrecision = 4096;

struct Interval {
  Rational lo, hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational mid() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

Interval max(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);  // requires lo >= 0
Interval operator*(const Rational& k, const Interval& a);  // requires k >= 0

// Centre plus radius; real enclosures have im == 0.
struct ComplexBall {
  Rational re, im, radius;
};

enum class PlaceKind { Real, Complex };

class AlgebraicNumber {
 public:
  const MinPoly& minpoly() const noexcept { return m_; }
  int degree() const noexcept { return m_.degree(); }
  int r() const noexcept { return r_; }
  int s() const noexcept { return s_; }
  std::size_t place_count() const noexcept { return static_cast<std::size_t>(r_ + s_); }
  PlaceKind kind(std::size_t place) const {
    return place < static_cast<std::size_t>(r_) ? PlaceKind::Real : PlaceKind::Complex;
  }
  // Representative conjugate of a place: real roots ascending, then one
  // root per conjugate pair from the closed upper half-plane, by (re, im).
  const RootDisk& conjugate(std::size_t place) const { return places_[place]; }
  // All n roots (isolation order).
  const std::vector<RootDisk>& roots() const noexcept { return roots_; }
  unsigned precision() const noexcept { return precision_; }

  AlgebraicNumber refined(unsigned precision) const;

  friend AlgebraicNumber analyze(const MinPoly& m, unsigned precision);

 private:
  AlgebraicNumber(MinPoly m, std::vector<RootDisk> roots, unsigned precision);
  MinPoly m_;
  std::vector<RootDisk> roots_;
  std::vector<RootDisk> places_;
  int r_ = 0;
  int s_ = 0;
  unsigned precision_ = 0;
};

// Certified conjugates with radii <= 2^-precision. Throws PrecisionExhausted.
AlgebraicNumber analyze(const MinPoly& m, unsigned precision = kDefaultPrecision);

enum class ModulusKind { AllUnitModulus, AllExpanding, SomeInside };

struct Classification {
  ModulusKind kind;
  bool is_root_of_unity = false;  // only meaningful for AllUnitModulus
  bool self_reciprocal = false;
  bool has_hrp() const { return kind != ModulusKind::SomeInside; }
};

std::string to_string(ModulusKind k);

// a_j = a_{n-j} for all j, or a_j = -a_{n-j} for all j.
bool is_self_reciprocal(const MinPoly& m);
// Largest M with phi(M) <= n.
unsigned max_cyclotomic_order(unsigned n);

// Exact classification. The unit-circle case is decided algebraically
// (self-reciprocal polynomial whose trace polynomial has all roots real in
// [-2, 2]); the remaining cases are separated by refining enclosures, which
// terminates because a non-self-reciprocal irreducible polynomial has no
// root of modulus one.
Classification classify(const AlgebraicNumber& a);

struct EmbeddingPoint {
  std::vector<ComplexBall> reals;
  std::vector<ComplexBall> complexes;
};

// p evaluated at every representative conjugate with radius <= 2^-precision.
EmbeddingPoint embed(const IntPoly& p, const AlgebraicNumber& a, unsigned precision = kDefaultPrecision);
// |p^(v)| at real places, |p^(v)|^2 at complex places.
Interval place_abs(const IntPoly& p, const AlgebraicNumber& a, std::size_t place,
                   unsigned precision = kDefaultPrecision);

// Fixed-point power table: Z_j ~ 2^Q z^j for every representative conjugate
// z and j <= max_degree, with integer error bounds E_j >= 2^Q |z^j - Z_j/2^Q|.
// Evaluating an IntPoly is then an integer dot product.
class PlaceTable {
 public:
  struct Value {
    Integer re, im;  // 2^Q * centre
    Integer err;     // 2^Q * bound on the modulus of the error
  };

  PlaceTable(const AlgebraicNumber& a, std::size_t max_degree);

  unsigned scale_bits() const noexcept { return q_; }
  std::size_t max_degree() const noexcept { return max_degree_; }
  std::size_t place_count() const noexcept { return re_.size(); }

  Value evaluate(const IntPoly& p, std::size_t place) const;
  ComplexBall ball(const Value& v) const;
  Interval abs_value(const Value& v, PlaceKind kind) const;

 private:
  unsigned q_;
  std::size_t max_degree_;
  std::vector<std::vector<Integer>> re_, im_, err_;
};

// Thread-safe lazily refined view of an AlgebraicNumber: level 0 is the
// given precision, each further level doubles it up to kMaxPrecision.
// Sign decisions refine until certified, and detect exact zeros
// algebraically so that boundary cases never depend on a tolerance.
class Embedder {
 public:
  Embedder(AlgebraicNumber a, std::size_t max_degree);
  Embedder(const Embedder&) = delete;
  Embedder& operator=(const Embedder&) = delete;

  const AlgebraicNumber& number() const noexcept { return base_; }
  std::size_t max_degree() const noexcept { return max_degree_; }
  std::size_t level_count() const noexcept { return levels_.size(); }
  const PlaceTable& table(std::size_t level = 0) const;
  const AlgebraicNumber& number(std::size_t level) const;

  // Sign of p at a real place. p(alpha) must be non-zero.
  int real_sign(const IntPoly& p, std::size_t place) const;
  // Signs of (Re, Im) of p at a complex place; 0 only for an exact zero.
  std::pair<int, int> complex_signs(const IntPoly& p, std::size_t place) const;
  // Whether the conjugate of delta at `place` is a real number (exact).
  bool is_real_at(const IntPoly& delta, std::size_t place) const;

  Interval place_abs(const IntPoly& p, std::size_t place) const;

 private:
  struct Level {
    AlgebraicNumber number;
    PlaceTable table;
  };
  const Level& level(std::size_t k) const;
  int coordinate_sign(const IntPoly& p, std::size_t place, bool imaginary) const;

  AlgebraicNumber base_;
  std::size_t max_degree_;
  mutable std::vector<std::unique_ptr<Level>> levels_;
  mutable std::unique_ptr<std::once_flag[]> once_;
};

}  // namespace hrp
