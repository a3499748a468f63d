#include "hrp/intpoly.hpp"

#include <algorithm>

namespace hrp {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& IntPoly::constant_term() const {
  static const Integer zero(0);
  return c_.empty() ? zero : c_.front();
}

Integer IntPoly::height() const {
  Integer h = 0;
  for (const auto& v : c_)
    if (abs(v) > h) h = abs(v);
  return h;
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Integer> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Integer> v(k, Integer(0));
  v.insert(v.end(), c_.begin(), c_.end());
  return IntPoly(std::move(v));
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= k;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

std::strong_ordering operator<=>(const IntPoly& a, const IntPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
  for (std::size_t k = 0; k < a.c_.size(); ++k) {
    const int c = cmp(a.c_[k], b.c_[k]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool lex_less(const IntPoly& a, const IntPoly& b, std::size_t width) {
  for (std::size_t k = 0; k < width; ++k) {
    const Integer x = a.coeff(k), y = b.coeff(k);
    if (x != y) return x < y;
  }
  return false;
}

std::string IntPoly::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k) s += ',';
    s += c_[k].get_str();
  }
  return s + "]";
}

std::size_t IntPolyHash::operator()(const IntPoly& p) const noexcept {
  std::size_t seed = p.size();
  for (const auto& v : p.coeffs()) hash_combine(seed, hash_value(v));
  return seed;
}

}  // namespace hrp
