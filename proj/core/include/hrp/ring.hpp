#pragma once

// Exact arithmetic in Q(alpha) and Z[alpha] for a fixed minimal polynomial.

#include <cstddef>
#include <string>
#include <vector>

#include "hrp/intpoly.hpp"
#include "hrp/numeric.hpp"
#include "hrp/qpoly.hpp"

namespace hrp {

// Primitive irreducible integer polynomial a_0 + ... + a_n x^n with a_n >= 1
// and a_0 != 0. Construction validates everything that can be checked
// without a full factorization: content, leading sign, a_0 != 0,
// squarefreeness and absence of rational roots (degree >= 2).
class MinPoly {
 public:
  explicit MinPoly(IntPoly p);
  static MinPoly from_coeffs(std::vector<Integer> coeffs) { return MinPoly(IntPoly(std::move(coeffs))); }

  const IntPoly& poly() const noexcept { return p_; }
  int degree() const noexcept { return p_.degree(); }
  const Integer& a0() const { return p_.coeffs().front(); }
  const Integer& lead() const { return p_.coeffs().back(); }
  const Integer& coeff(std::size_t k) const { return p_.coeffs()[k]; }
  // |M(0)|, the order of Z[alpha] / alpha Z[alpha].
  Integer norm_index() const { return abs(a0()); }

  friend bool operator==(const MinPoly& a, const MinPoly& b) { return a.p_ == b.p_; }

 private:
  IntPoly p_;
};

// Coordinates of an element of Q(alpha) in the basis 1, alpha, ...,
// alpha^(n-1). Coordinate equality is equality in the field.
class FieldElem {
 public:
  FieldElem() = default;
  explicit FieldElem(std::vector<Rational> coords);
  static FieldElem zero(std::size_t n) { return FieldElem(std::vector<Rational>(n)); }
  static FieldElem rational(std::size_t n, const Rational& q);

  const std::vector<Rational>& coords() const noexcept { return c_; }
  std::size_t dim() const noexcept { return c_.size(); }
  const Rational& operator[](std::size_t k) const { return c_[k]; }
  bool is_zero() const;
  // True when only the constant coordinate may be non-zero.
  bool is_rational() const;

  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const Rational& k);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(const Rational& k, FieldElem a) { return a *= k; }
  FieldElem operator-() const;
  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.c_ == b.c_; }
  friend bool operator<(const FieldElem& a, const FieldElem& b) { return a.c_ < b.c_; }

  // "(p/q, p/q, ...)"
  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

struct FieldElemHash {
  std::size_t operator()(const FieldElem& x) const noexcept;
};

// Evaluation map Z[x] -> Q(alpha), Horner form.
FieldElem to_field(const IntPoly& p, const MinPoly& m);
// Same map through an explicit table of alpha^k; used to cross-check Horner.
FieldElem to_field_power_table(const IntPoly& p, const MinPoly& m);

FieldElem mul(const FieldElem& x, const FieldElem& y, const MinPoly& m);
FieldElem mul_alpha(const FieldElem& x, const MinPoly& m);
FieldElem div_alpha(const FieldElem& x, const MinPoly& m);
FieldElem alpha_power(std::size_t k, const MinPoly& m);

// Writes x = P(alpha) / den with P an integer polynomial of degree < n and
// den > 0 minimal.
IntPoly clear_denominators(const FieldElem& x, Integer& den);

// Characteristic polynomial of multiplication by x on Q(alpha) (monic,
// degree n); a power of the minimal polynomial of x.
RatPoly charpoly(const FieldElem& x, const MinPoly& m);

// q with q(alpha) = g(alpha) / alpha, using a_0 = -alpha (a_1 + ... +
// a_n alpha^(n-1)). Throws DivisibilityError unless a_0 | g(0).
IntPoly div_by_alpha(const IntPoly& g, const MinPoly& m);

// p(alpha) in alpha Z[alpha]. Exact: Z[alpha] / alpha Z[alpha] is
// Z[x] / (M, x) = Z / M(0), so the class of p is p(0) mod a_0.
bool in_alpha_zalpha(const IntPoly& p, const MinPoly& m);

}  // namespace hrp
