#pragma once

// The digit set: for every residue r of Z[alpha] / alpha Z[alpha] and every
// open orthant U of R^r x C^s one element eps(r, U) of r + alpha Z[alpha]
// embedded strictly inside U, together with the constants that make the
// division step height-reducing at every archimedean place.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hrp/intpoly.hpp"
#include "hrp/places.hpp"
#include "hrp/ring.hpp"

namespace hrp {

inline constexpr long kDefaultSearchBudget = 64;

// Open orthant: a sign per real place and a quadrant (1..4, counter-
// clockwise from Re > 0, Im > 0) per complex place.
struct Orthant {
  std::vector<int> real_signs;
  std::vector<int> quadrants;

  static std::size_t count(int r, int s) { return std::size_t{1} << (r + 2 * s); }
  static Orthant from_index(std::size_t index, int r, int s);
  // Inverse of "+-|q1q3" labels.
  static Orthant parse(std::string_view label, int r, int s);
  std::size_t index() const;
  std::string label() const;
  friend bool operator==(const Orthant&, const Orthant&) = default;
};

// Quadrant whose closure holds a point with the given coordinate signs.
// Points on an axis go to the lowest-numbered adjacent quadrant.
int quadrant_of(int re_sign, int im_sign);

struct Digit {
  IntPoly rep;  // eps itself
  IntPoly h;    // eps = coset + alpha h(alpha)
  Integer coset;
  Orthant orthant;
  // Certified lower bound on the distance of every embedding coordinate
  // from zero.
  Rational margin;
  // Per place: 2|eps| at real places, (|eps| (1 + 1/sin eta))^2 at complex
  // places, with eta the angular distance of eps from its quadrant's axes.
  std::vector<Interval> c_per_place;
  // Lower bound of sin(eta) per complex place.
  std::vector<Rational> sin_gap;
};

class DigitSet {
 public:
  DigitSet(MinPoly alpha, int r, int s, std::vector<Digit> digits);

  const MinPoly& alpha() const noexcept { return alpha_; }
  const std::vector<Digit>& digits() const noexcept { return digits_; }
  const Digit& operator[](std::size_t id) const { return digits_.at(id); }
  std::size_t size() const noexcept { return digits_.size(); }
  // max over digits and places of the upper end of c_per_place.
  const Rational& c() const noexcept { return c_; }
  // 2^n |M(0)|.
  Integer cardinality_bound() const;

  std::optional<std::size_t> find(const Integer& coset, std::size_t orthant_index) const;

 private:
  MinPoly alpha_;
  int r_, s_;
  std::vector<Digit> digits_;
  Rational c_;
  std::vector<std::size_t> lookup_;
};

// {0, 1, ..., |M(0)| - 1}. With minimize, residues are deduplicated by
// testing their differences with the lattice search, which agrees with
// the default set (the quotient ring is Z / M(0)).
std::vector<Integer> coset_representatives(const MinPoly& m, bool minimize = false);

// Searches eps = r + alpha h(alpha), deg h <= n - 1, over coefficient boxes
// of radius 1, 2, 4, ... <= budget. Among certified interior hits of the
// first successful box keeps the one of least max-place value; candidates
// whose enclosures cannot be separated from that minimum tie, and the
// lexicographically smallest h wins. Throws SearchExhausted.
Digit find_digit(const Integer& r, const Orthant& orthant, const Embedder& emb, long budget = kDefaultSearchBudget);
Digit find_digit(const Integer& r, const Orthant& orthant, const AlgebraicNumber& a,
                 long budget = kDefaultSearchBudget);

// Recomputes coset, orthant, margin and constants of a given element.
// Throws InputError if it is zero or not certifiably inside an orthant.
Digit certify_digit(const IntPoly& rep, const Embedder& emb);

// Requires classify(a) != SomeInside (InputError otherwise).
DigitSet build_digit_set(const Embedder& emb, long budget = kDefaultSearchBudget, unsigned workers = 0);
DigitSet build_digit_set(const AlgebraicNumber& a, long budget = kDefaultSearchBudget);

// Signs of p at every place folded into an orthant index, resolving
// boundary coordinates as quadrant_of does. p(alpha) != 0.
std::size_t closed_orthant_index(const IntPoly& p, const Embedder& emb);

}  // namespace hrp
