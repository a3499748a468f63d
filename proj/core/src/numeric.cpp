#include "hrp/numeric.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "hrp/errors.hpp"

namespace hrp {

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  Integer am = abs(m);
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), am.get_mpz_t());
  return r;
}

Integer isqrt_floor(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer isqrt_ceil(const Integer& n) {
  Integer r = isqrt_floor(n);
  if (r * r < n) ++r;
  return r;
}

Integer ceil_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer floor_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer ceil(const Rational& q) { return ceil_div(q.get_num(), q.get_den()); }
Integer floor(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }

Rational ldexp(const Rational& x, long k) {
  Rational r;
  if (k >= 0)
    mpq_mul_2exp(r.get_mpq_t(), x.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
  else
    mpq_div_2exp(r.get_mpq_t(), x.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
  return r;
}

Rational sqrt_upper(const Rational& q, unsigned bits) {
  // ceil(sqrt(ceil(q * 4^bits))) / 2^bits
  Integer scaled = ceil(ldexp(q, 2L * bits));
  Rational r(isqrt_ceil(scaled));
  return ldexp(r, -static_cast<long>(bits));
}

Rational sqrt_lower(const Rational& q, unsigned bits) {
  Integer scaled = floor(ldexp(q, 2L * bits));
  if (scaled < 0) scaled = 0;
  Rational r(isqrt_floor(scaled));
  return ldexp(r, -static_cast<long>(bits));
}

std::size_t hash_value(const Integer& z) noexcept {
  std::size_t seed = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
  const std::size_t n = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < n; ++i)
    hash_combine(seed, static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)));
  return seed;
}

namespace {

Integer pow10(int k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return r;
}

Integer round_scaled(const Rational& x, Rounding mode) {
  switch (mode) {
    case Rounding::Down:
      return floor(x);
    case Rounding::Up:
      return ceil(x);
    case Rounding::Nearest:
    default:
      return floor(x + Rational(1, 2));
  }
}

}  // namespace

std::string to_fixed(const Rational& x, int frac_digits, Rounding mode) {
  const Integer scaled = round_scaled(x * Rational(pow10(frac_digits)), mode);
  const bool neg = scaled < 0;
  std::string digits = Integer(abs(scaled)).get_str();
  if (frac_digits > 0) {
    if (static_cast<int>(digits.size()) <= frac_digits)
      digits.insert(0, static_cast<std::size_t>(frac_digits + 1 - static_cast<int>(digits.size())), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(frac_digits), ".");
  }
  return neg ? "-" + digits : digits;
}

std::string to_scientific(const Rational& x, int sig_digits, Rounding mode) {
  if (x == 0) return sig_digits > 1 ? "0." + std::string(static_cast<std::size_t>(sig_digits - 1), '0') + "e+00" : "0e+00";
  const bool neg = x < 0;
  Rational ax = abs(x);
  // Decimal exponent e with 10^e <= ax < 10^(e+1).
  long e = 0;
  {
    // Estimate via bit sizes, then correct exactly.
    const long nb = static_cast<long>(mpz_sizeinbase(ax.get_num_mpz_t(), 2));
    const long db = static_cast<long>(mpz_sizeinbase(ax.get_den_mpz_t(), 2));
    e = static_cast<long>(std::floor((nb - db) * 0.30102999566398120));
    auto p10 = [](long k) {
      return k >= 0 ? Rational(pow10(static_cast<int>(k))) : Rational(1) / Rational(pow10(static_cast<int>(-k)));
    };
    while (p10(e) > ax) --e;
    while (p10(e + 1) <= ax) ++e;
  }
  const long shift = sig_digits - 1 - e;
  Rational scaled = shift >= 0 ? Rational(ax * Rational(pow10(static_cast<int>(shift))))
                               : Rational(ax / Rational(pow10(static_cast<int>(-shift))));
  Rounding m = mode;
  if (neg && mode == Rounding::Up) m = Rounding::Down;
  else if (neg && mode == Rounding::Down) m = Rounding::Up;
  Integer mant = round_scaled(scaled, m);
  if (mant.get_str().size() > static_cast<std::size_t>(sig_digits)) {
    // rounding carried into a new digit (e.g. 9.99 -> 10.0)
    mant /= 10;
    ++e;
  }
  std::string digits = mant.get_str();
  std::string out = neg ? "-" : "";
  out += digits.substr(0, 1);
  if (digits.size() > 1) out += "." + digits.substr(1);
  out += "e";
  out += (e < 0 ? "-" : "+");
  const std::string ex = std::to_string(e < 0 ? -e : e);
  out += (ex.size() < 2 ? "0" : "") + ex;
  return out;
}

std::string to_fraction(const Rational& x) {
  Rational y = x;
  y.canonicalize();
  if (y.get_den() == 1) return y.get_num().get_str();
  return y.get_num().get_str() + "/" + y.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto fail = [&]() { throw InputError("cannot parse rational '" + s + "'"); };
  if (s.empty()) fail();
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num, den;
    if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0) fail();
    if (den == 0) fail();
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  std::string mant;
  long frac = 0;
  bool seen_point = false;
  for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
    if (s[i] == '.') {
      if (seen_point) fail();
      seen_point = true;
    } else {
      mant += s[i];
      if (seen_point) ++frac;
    }
  }
  if (mant.empty()) fail();
  long exp10 = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') fail();
    ++i;
    std::string ex = s.substr(i);
    if (ex.empty()) fail();
    try {
      std::size_t used = 0;
      exp10 = std::stol(ex, &used);
      if (used != ex.size()) fail();
    } catch (const std::logic_error&) {
      fail();
    }
  }
  Rational r(Integer(mant, 10));
  const long k = exp10 - frac;
  if (k >= 0)
    r *= Rational(pow10(static_cast<int>(k)));
  else
    r /= Rational(pow10(static_cast<int>(-k)));
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

long double to_long_double(const Integer& z) {
  long exp = 0;
  const double m = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::ldexp(static_cast<long double>(m), static_cast<int>(exp));
}

long double to_long_double(const Rational& q) {
  long en = 0, ed = 0;
  const double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::ldexp(static_cast<long double>(mn) / md, static_cast<int>(en - ed));
}

}  // namespace hrp
