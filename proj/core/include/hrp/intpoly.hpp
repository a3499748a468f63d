#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hrp/numeric.hpp"

namespace hrp {

// Integer polynomial with ascending coefficients. As an element of Z[alpha]
// it denotes sum coeffs[j] * alpha^j; the representative is not unique
// unless degree < deg M_alpha.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t k);

  const std::vector<Integer>& coeffs() const noexcept { return c_; }
  std::size_t size() const noexcept { return c_.size(); }
  bool is_zero() const noexcept { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
  const Integer& constant_term() const;

  // Absolute value of the largest coefficient; 0 for the zero polynomial.
  Integer height() const;
  Integer content() const;
  IntPoly derivative() const;
  IntPoly shifted(std::size_t k) const;  // times x^k
  Integer eval(const Integer& x) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Integer& k);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const Integer& k) { return a *= k; }
  friend IntPoly operator*(const Integer& k, IntPoly a) { return a *= k; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  // Deterministic total order: shorter first, then coefficient-wise from the
  // constant term upward.
  friend std::strong_ordering operator<=>(const IntPoly& a, const IntPoly& b);

  // "[c0,c1,...]"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

// Compares zero-padded coefficient vectors of length `width`, index 0 first.
bool lex_less(const IntPoly& a, const IntPoly& b, std::size_t width);

struct IntPolyHash {
  std::size_t operator()(const IntPoly& p) const noexcept;
};

}  // namespace hrp
