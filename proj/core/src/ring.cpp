#include "hrp/ring.hpp"

#include "hrp/errors.hpp"
#include "hrp/qpoly.hpp"

namespace hrp {

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  if (n > Integer("1000000000000"))
    throw InputError("coefficient " + n.get_str() + " too large for the rational-root screen");
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool has_rational_root(const IntPoly& p) {
  const RatPoly q(p);
  const auto num = positive_divisors(p.coeffs().front());
  const auto den = positive_divisors(p.coeffs().back());
  for (const auto& a : num)
    for (const auto& b : den) {
      Rational r(a, b);
      r.canonicalize();
      if (q.eval(r) == 0 || q.eval(-r) == 0) return true;
    }
  return false;
}

}  // namespace

MinPoly::MinPoly(IntPoly p) : p_(std::move(p)) {
  if (p_.degree() < 1) throw InputError("minimal polynomial must have degree >= 1");
  if (p_.coeffs().front() == 0) throw InputError("M(0) = 0: alpha must be non-zero");
  if (p_.coeffs().back() < 1) throw InputError("leading coefficient must be positive");
  if (p_.content() != 1) throw InputError("coefficients must have gcd 1");
  if (p_.degree() >= 2) {
    const RatPoly q(p_);
    if (gcd(q, q.derivative()).degree() > 0) throw InputError("minimal polynomial has a repeated factor");
    if (has_rational_root(p_)) throw InputError("minimal polynomial has a rational root (reducible)");
  }
}

FieldElem::FieldElem(std::vector<Rational> coords) : c_(std::move(coords)) {}

FieldElem FieldElem::rational(std::size_t n, const Rational& q) {
  std::vector<Rational> v(n);
  v[0] = q;
  return FieldElem(std::move(v));
}

bool FieldElem::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

bool FieldElem::is_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

FieldElem& FieldElem::operator*=(const Rational& k) {
  for (auto& v : c_) v *= k;
  return *this;
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

std::string FieldElem::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k) s += ", ";
    s += to_fraction(c_[k]);
  }
  return s + ")";
}

std::size_t FieldElemHash::operator()(const FieldElem& x) const noexcept {
  std::size_t seed = x.dim();
  for (const auto& v : x.coords()) {
    hash_combine(seed, hash_value(v.get_num()));
    hash_combine(seed, hash_value(v.get_den()));
  }
  return seed;
}

FieldElem mul_alpha(const FieldElem& x, const MinPoly& m) {
  const std::size_t n = x.dim();
  std::vector<Rational> v(n);
  const Rational top = x[n - 1];
  for (std::size_t k = n - 1; k >= 1; --k) v[k] = x[k - 1];
  v[0] = 0;
  if (top != 0) {
    const Rational t = top / Rational(m.lead());
    for (std::size_t k = 0; k < n; ++k) v[k] -= t * m.coeff(k);
  }
  return FieldElem(std::move(v));
}

FieldElem to_field(const IntPoly& p, const MinPoly& m) {
  const auto n = static_cast<std::size_t>(m.degree());
  FieldElem acc = FieldElem::zero(n);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = mul_alpha(acc, m);
    acc += FieldElem::rational(n, Rational(*it));
  }
  return acc;
}

FieldElem alpha_power(std::size_t k, const MinPoly& m) {
  const auto n = static_cast<std::size_t>(m.degree());
  FieldElem x = FieldElem::rational(n, 1);
  for (std::size_t j = 0; j < k; ++j) x = mul_alpha(x, m);
  return x;
}

FieldElem to_field_power_table(const IntPoly& p, const MinPoly& m) {
  const auto n = static_cast<std::size_t>(m.degree());
  FieldElem acc = FieldElem::zero(n);
  FieldElem power = FieldElem::rational(n, 1);
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) power = mul_alpha(power, m);
    acc += Rational(p.coeffs()[k]) * power;
  }
  return acc;
}

FieldElem mul(const FieldElem& x, const FieldElem& y, const MinPoly& m) {
  // Horner over the coordinates of y: x * y = sum y_k (alpha^k x).
  const std::size_t n = x.dim();
  FieldElem acc = FieldElem::zero(n);
  FieldElem shifted = x;
  for (std::size_t k = 0; k < n; ++k) {
    if (k) shifted = mul_alpha(shifted, m);
    if (y[k] != 0) acc += y[k] * shifted;
  }
  return acc;
}

FieldElem div_alpha(const FieldElem& x, const MinPoly& m) {
  const auto n = static_cast<std::size_t>(m.degree());
  std::vector<Rational> inv(n);
  // alpha^-1 = -(a_1 + a_2 alpha + ... + a_n alpha^(n-1)) / a_0
  for (std::size_t k = 0; k < n; ++k) inv[k] = Rational(-m.coeff(k + 1)) / Rational(m.a0());
  return mul(x, FieldElem(std::move(inv)), m);
}

IntPoly clear_denominators(const FieldElem& x, Integer& den) {
  den = 1;
  for (const auto& v : x.coords()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> c;
  c.reserve(x.dim());
  for (const auto& v : x.coords()) c.emplace_back(v.get_num() * (den / v.get_den()));
  return IntPoly(std::move(c));
}

IntPoly div_by_alpha(const IntPoly& g, const MinPoly& m) {
  if (g.is_zero()) return {};
  const Integer& g0 = g.constant_term();
  if (g0 % m.a0() != 0)
    throw DivisibilityError("constant term " + g0.get_str() + " not divisible by M(0) = " + m.a0().get_str());
  const Integer t = g0 / m.a0();
  const auto n = static_cast<std::size_t>(m.degree());
  std::vector<Integer> q(std::max(g.size() > 0 ? g.size() - 1 : 0, n), Integer(0));
  for (std::size_t k = 1; k < g.size(); ++k) q[k - 1] = g.coeffs()[k];
  for (std::size_t k = 0; k < n; ++k) q[k] -= t * m.coeff(k + 1);
  return IntPoly(std::move(q));
}

RatPoly charpoly(const FieldElem& x, const MinPoly& m) {
  // Faddeev-LeVerrier on the multiplication matrix (column k = x alpha^k).
  const auto n = static_cast<std::size_t>(m.degree());
  using Matrix = std::vector<std::vector<Rational>>;
  Matrix a(n, std::vector<Rational>(n));
  FieldElem col = x;
  for (std::size_t k = 0; k < n; ++k) {
    if (k) col = mul_alpha(col, m);
    for (std::size_t i = 0; i < n; ++i) a[i][k] = col[i];
  }
  auto matmul = [n](const Matrix& u, const Matrix& v) {
    Matrix w(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (u[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) w[i][j] += u[i][l] * v[l][j];
      }
    return w;
  };
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk(n, std::vector<Rational>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix am = matmul(a, mk);
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    mk = std::move(am);
    const Matrix t = matmul(a, mk);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += t[i][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return RatPoly(std::move(c));
}

bool in_alpha_zalpha(const IntPoly& p, const MinPoly& m) {
  return p.constant_term() % m.a0() == 0;
}

}  // namespace hrp
