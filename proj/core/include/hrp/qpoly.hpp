#pragma once

#include <utility>
#include <vector>

#include "hrp/intpoly.hpp"
#include "hrp/numeric.hpp"

namespace hrp {

// Dense polynomial over Q, ascending coefficients, trailing zeros trimmed.
// Used for the exact side computations (gcds, Sturm chains, division
// tests); the expansion hot path never touches it.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  explicit RatPoly(const IntPoly& p);

  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const Rational& lead() const { return c_.back(); }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  RatPoly derivative() const;
  RatPoly monic() const;
  Rational eval(const Rational& x) const;
  // Scaled to a primitive integer polynomial with positive leading term.
  IntPoly primitive_part() const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rational& k, const RatPoly& a);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder; b must be non-zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
// Monic gcd (zero if both are zero).
RatPoly gcd(RatPoly a, RatPoly b);
// a / gcd(a, a'), i.e. the product of the distinct irreducible factors.
RatPoly squarefree_part(const RatPoly& a);

// Number of distinct real roots in the half-open interval (lo, hi], by a
// Sturm chain. Requires a squarefree input.
int count_real_roots(const RatPoly& p, const Rational& lo, const Rational& hi);

}  // namespace hrp
