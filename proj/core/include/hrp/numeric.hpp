#pragma once

// Exact scalar types and the handful of bounds/format helpers the rest of
// the library builds on. Everything here is exact; no floating point value
// ever decides control flow.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace hrp {

using Integer = mpz_class;
using Rational = mpq_class;

// Non-negative remainder of a modulo |m|; m != 0.
Integer mod_floor(const Integer& a, const Integer& m);

// floor(sqrt(n)) and ceil(sqrt(n)) for n >= 0.
Integer isqrt_floor(const Integer& n);
Integer isqrt_ceil(const Integer& n);

// Dyadic u with u >= sqrt(q) and u - sqrt(q) <= 2^-bits (q >= 0).
Rational sqrt_upper(const Rational& q, unsigned bits);
// Dyadic l with 0 <= l <= sqrt(q) and sqrt(q) - l <= 2^-bits.
Rational sqrt_lower(const Rational& q, unsigned bits);

Integer ceil_div(const Integer& num, const Integer& den);
Integer floor_div(const Integer& num, const Integer& den);
Integer ceil(const Rational& q);
Integer floor(const Rational& q);

// x * 2^k exactly (k may be negative).
Rational ldexp(const Rational& x, long k);

// Size-aware hash of an arbitrary precision integer.
std::size_t hash_value(const Integer& z) noexcept;

inline void hash_combine(std::size_t& seed, std::size_t v) noexcept {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

enum class Rounding { Down, Up, Nearest };

// Fixed-point decimal rendering with `frac_digits` digits after the point.
std::string to_fixed(const Rational& x, int frac_digits, Rounding mode = Rounding::Nearest);
// Scientific rendering d.ddd...e±X with `sig_digits` significant digits.
std::string to_scientific(const Rational& x, int sig_digits, Rounding mode = Rounding::Nearest);
// "p/q" (or "p" when q = 1).
std::string to_fraction(const Rational& x);

// Parses "p", "p/q", "-1.25", "1e-9", "2.5E+3" exactly. Throws InputError.
Rational parse_rational(std::string_view text);

long double to_long_double(const Rational& q);
long double to_long_double(const Integer& z);

}  // namespace hrp
