#pragma once

#include <complex>
#include <vector>

#include "hrp/intpoly.hpp"
#include "hrp/numeric.hpp"

namespace hrp {

// Closed disk |z - c| <= radius with dyadic centre c = (re + i im) / 2^exp.
struct RootDisk {
  Integer re;
  Integer im;
  unsigned exp = 0;
  Rational radius;

  bool is_real() const { return im == 0; }
  Rational center_re() const;
  Rational center_im() const;
  // |c|^2 exactly.
  Rational center_norm() const;
  std::complex<long double> approx() const;
};

// Certified isolation of every complex root of a squarefree integer
// polynomial. On return the disks are pairwise disjoint and each holds
// exactly one root; real roots have real centres, disks of non-real roots
// miss the real axis, and non-real roots come in exactly conjugate pairs.
// All radii are <= 2^-precision. Order: real roots ascending, then
// non-real roots by (re, im).
//
// Certification uses the Gerschgorin-type inclusion for the
// Weierstrass corrections W_i = p(c_i) / (a_d prod_{j != i} (c_i - c_j)):
// disks D(c_i, d |W_i|) cover all roots and each connected component of
// k disks holds exactly k roots. Every quantity is evaluated exactly.
//
// Throws PrecisionExhausted when the working precision would exceed
// max_bits.
std::vector<RootDisk> isolate_roots(const IntPoly& p, unsigned precision, unsigned max_bits = 4096 + 512);

}  // namespace hrp
