#include "hrp/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hrp/errors.hpp"

namespace hrp {

Rational RootDisk::center_re() const { return ldexp(Rational(re), -static_cast<long>(exp)); }
Rational RootDisk::center_im() const { return ldexp(Rational(im), -static_cast<long>(exp)); }
Rational RootDisk::center_norm() const {
  return ldexp(Rational(Integer(re * re + im * im)), -2L * static_cast<long>(exp));
}
std::complex<long double> RootDisk::approx() const {
  return {to_long_double(center_re()), to_long_double(center_im())};
}

namespace {

using CLD = std::complex<long double>;

// Fixed-point Gaussian number: value = (re + i im) / 2^F for an implicit F.
struct Fix {
  Integer re, im;
};

Integer shr(const Integer& x, unsigned k) {
  Integer r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

Integer shl(const Integer& x, unsigned k) {
  Integer r;
  mpz_mul_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

Integer round_shr(const Integer& x, unsigned k) {
  if (k == 0) return x;
  return shr(x + shl(Integer(1), k - 1), k);
}

Fix mul(const Fix& a, const Fix& b, unsigned F) {
  return {shr(a.re * b.re - a.im * b.im, F), shr(a.re * b.im + a.im * b.re, F)};
}

// a / b; returns false when b == 0.
bool div(const Fix& a, const Fix& b, unsigned F, Fix& out) {
  const Integer d = b.re * b.re + b.im * b.im;
  if (d == 0) return false;
  out.re = floor_div(shl(a.re * b.re + a.im * b.im, F), d);
  out.im = floor_div(shl(a.im * b.re - a.re * b.im, F), d);
  return true;
}

Fix from_cld(CLD z, unsigned F) {
  auto conv = [F](long double x) {
    int e = 0;
    const long double m = std::frexp(x, &e);  // x = m * 2^e, |m| in [0.5, 1)
    Integer mant(static_cast<double>(std::ldexp(static_cast<double>(m), 53)));
    const long shift = static_cast<long>(F) + e - 53;
    return shift >= 0 ? shl(mant, static_cast<unsigned>(shift)) : shr(mant, static_cast<unsigned>(-shift));
  };
  return {conv(z.real()), conv(z.imag())};
}

CLD to_cld(const Fix& z, unsigned F) {
  return {to_long_double(ldexp(Rational(z.re), -static_cast<long>(F))),
          to_long_double(ldexp(Rational(z.im), -static_cast<long>(F)))};
}

Fix eval_fix(const std::vector<Integer>& c, const Fix& z, unsigned F) {
  Fix acc{shl(c.back(), F), 0};
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc = mul(acc, z, F);
    acc.re += shl(c[k], F);
  }
  return acc;
}

std::vector<CLD> aberth_long_double(const std::vector<long double>& c) {
  const std::size_t d = c.size() - 1;
  // Start on a circle of the geometric-mean radius, off any symmetry axis.
  const long double radius = std::pow(std::fabs(c[0] / c[d]), 1.0L / static_cast<long double>(d));
  std::vector<CLD> z(d);
  for (std::size_t k = 0; k < d; ++k) {
    const long double t = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(d) + 0.4L;
    z[k] = std::polar(radius > 0 ? radius : 1.0L, t);
  }
  auto eval = [&](CLD x, CLD& dp) {
    CLD p = c[d];
    dp = 0;
    for (std::size_t k = d; k-- > 0;) {
      dp = dp * x + p;
      p = p * x + c[k];
    }
    return p;
  };
  for (int iter = 0; iter < 800; ++iter) {
    long double worst = 0;
    for (std::size_t k = 0; k < d; ++k) {
      CLD dp;
      const CLD p = eval(z[k], dp);
      if (p == CLD(0)) continue;
      if (dp == CLD(0)) dp = CLD(1e-30L);
      const CLD ratio = p / dp;
      CLD sum = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      const CLD w = ratio / (1.0L - ratio * sum);
      if (std::isfinite(w.real()) && std::isfinite(w.imag())) {
        z[k] -= w;
        worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[k])));
      }
    }
    if (worst < 1e-18L) break;
  }
  return z;
}

// One Gauss-Seidel sweep of exact-rounded Aberth corrections; returns the
// largest correction exponent reached (log2 |w|), or +inf on degeneracy.
long double aberth_fix_sweep(std::vector<Fix>& z, const std::vector<Integer>& c, const std::vector<Integer>& dc,
                             unsigned F) {
  long double worst = -1e30L;
  const std::size_t d = z.size();
  for (std::size_t k = 0; k < d; ++k) {
    const Fix p = eval_fix(c, z[k], F);
    if (p.re == 0 && p.im == 0) continue;
    const Fix dp = dc.empty() ? Fix{0, 0} : eval_fix(dc, z[k], F);
    Fix ratio;
    if (!div(p, dp, F, ratio)) return 1e30L;
    Fix sum{0, 0};
    const Fix one{shl(Integer(1), F), 0};
    for (std::size_t j = 0; j < d; ++j) {
      if (j == k) continue;
      Fix diff{z[k].re - z[j].re, z[k].im - z[j].im};
      Fix inv;
      if (!div(one, diff, F, inv)) return 1e30L;
      sum.re += inv.re;
      sum.im += inv.im;
    }
    const Fix rs = mul(ratio, sum, F);
    const Fix denom{one.re - rs.re, -rs.im};
    Fix w;
    if (!div(ratio, denom, F, w)) return 1e30L;
    z[k].re -= w.re;
    z[k].im -= w.im;
    const Integer mag = abs(w.re) + abs(w.im);
    if (mag != 0) {
      const long double lg = static_cast<long double>(mpz_sizeinbase(mag.get_mpz_t(), 2)) - static_cast<long double>(F);
      worst = std::max(worst, lg);
    }
  }
  return worst;
}

// Exact p(C / 2^W) * 2^(W d) as a Gaussian integer.
void eval_exact(const std::vector<Integer>& c, const Integer& cre, const Integer& cim, unsigned W, Integer& vre,
                Integer& vim) {
  const std::size_t d = c.size() - 1;
  vre = c[d];
  vim = 0;
  for (std::size_t k = d; k-- > 0;) {
    Integer nre = vre * cre - vim * cim;
    Integer nim = vre * cim + vim * cre;
    vre = nre + shl(c[k], static_cast<unsigned>(W * (d - k)));
    vim = nim;
  }
}

struct Candidate {
  Integer re, im;
};

bool certify(const std::vector<Integer>& c, std::vector<Candidate>& cand, unsigned W, unsigned precision,
             std::vector<RootDisk>& out) {
  const std::size_t d = cand.size();
  // Classify near-real approximations and pair the rest exactly.
  std::vector<int> cls(d, 0);  // 0 real, 1 upper, -1 lower
  for (std::size_t k = 0; k < d; ++k) {
    const Integer bound = shl(Integer(1), W) + abs(cand[k].re);
    if (shl(abs(cand[k].im), W / 2) < bound)
      cls[k] = 0;
    else
      cls[k] = cand[k].im > 0 ? 1 : -1;
  }
  std::vector<std::size_t> upper, lower;
  for (std::size_t k = 0; k < d; ++k) {
    if (cls[k] == 0) cand[k].im = 0;
    if (cls[k] == 1) upper.push_back(k);
    if (cls[k] == -1) lower.push_back(k);
  }
  if (upper.size() != lower.size()) return false;
  std::vector<bool> used(lower.size(), false);
  for (std::size_t u : upper) {
    std::size_t best = lower.size();
    Integer best_dist;
    for (std::size_t j = 0; j < lower.size(); ++j) {
      if (used[j]) continue;
      const Candidate& l = cand[lower[j]];
      const Integer dre = l.re - cand[u].re, dim = l.im + cand[u].im;
      const Integer dist = dre * dre + dim * dim;
      if (best == lower.size() || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    used[best] = true;
    cand[lower[best]].re = cand[u].re;
    cand[lower[best]].im = -cand[u].im;
  }

  const Integer lead = c.back();
  std::vector<Rational> radius(d);
  for (std::size_t k = 0; k < d; ++k) {
    Integer pre, pim;
    eval_exact(c, cand[k].re, cand[k].im, W, pre, pim);
    Integer prod = 1;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == k) continue;
      const Integer dre = cand[k].re - cand[j].re, dim = cand[k].im - cand[j].im;
      prod *= dre * dre + dim * dim;
    }
    if (prod == 0) return false;
    // r^2 = d^2 |p(c)|^2 / (a_d^2 prod |c_k - c_j|^2)  with the 2^W scalings.
    Rational r2(Integer(static_cast<unsigned long>(d * d) * (pre * pre + pim * pim)), Integer(lead * lead * prod));
    r2.canonicalize();
    r2 = ldexp(r2, -2L * static_cast<long>(W));
    radius[k] = sqrt_upper(r2, W + 32);
    if (radius[k] > ldexp(Rational(1), -static_cast<long>(precision))) return false;
  }
  const Rational scale = ldexp(Rational(1), -2L * static_cast<long>(W));
  for (std::size_t k = 0; k < d; ++k) {
    if (cand[k].im != 0) {
      const Rational im = ldexp(Rational(abs(cand[k].im)), -static_cast<long>(W));
      if (im <= radius[k]) return false;
    }
    for (std::size_t j = k + 1; j < d; ++j) {
      const Integer dre = cand[k].re - cand[j].re, dim = cand[k].im - cand[j].im;
      const Rational dist2 = Rational(Integer(dre * dre + dim * dim)) * scale;
      const Rational sum = radius[k] + radius[j];
      if (dist2 <= sum * sum) return false;
    }
  }
  out.clear();
  for (std::size_t k = 0; k < d; ++k) out.push_back(RootDisk{cand[k].re, cand[k].im, W, radius[k]});
  std::sort(out.begin(), out.end(), [](const RootDisk& a, const RootDisk& b) {
    const bool ar = a.is_real(), br = b.is_real();
    if (ar != br) return ar;
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
  return true;
}

}  // namespace

std::vector<RootDisk> isolate_roots(const IntPoly& poly, unsigned precision, unsigned max_bits) {
  if (poly.degree() < 1) return {};
  const std::vector<Integer>& c = poly.coeffs();
  const std::vector<Integer> dc = poly.derivative().coeffs();
  std::vector<long double> cl;
  for (const auto& v : c) cl.push_back(to_long_double(v));
  std::vector<CLD> approx = aberth_long_double(cl);

  unsigned W = std::max(precision + 16, 64u);
  const unsigned guard = 48;
  std::vector<Fix> z;
  unsigned F = W + guard;
  for (const auto& a : approx) z.push_back(from_cld(a, F));
  while (W <= max_bits) {
    F = W + guard;
    for (int sweep = 0; sweep < 12 + 2 * static_cast<int>(std::log2(static_cast<double>(W))); ++sweep) {
      const long double worst = aberth_fix_sweep(z, c, dc, F);
      if (worst >= 1e29L) {
        // Coincident approximations: restart from perturbed long double values.
        for (std::size_t k = 0; k < z.size(); ++k) {
          CLD a = to_cld(z[k], F);
          a *= CLD(1.0L + 1e-3L * static_cast<long double>(k + 1), 1e-3L);
          z[k] = from_cld(a, F);
        }
        continue;
      }
      if (worst < -static_cast<long double>(W + 8)) break;
    }
    std::vector<Candidate> cand;
    for (const auto& v : z) cand.push_back({round_shr(v.re, guard), round_shr(v.im, guard)});
    std::vector<RootDisk> out;
    if (certify(c, cand, W, precision, out)) return out;
    // Continue from the symmetrised centres at twice the precision.
    const unsigned W2 = W * 2;
    for (std::size_t k = 0; k < z.size(); ++k) {
      z[k].re = shl(cand[k].re, W2 + guard - W);
      z[k].im = shl(cand[k].im, W2 + guard - W);
    }
    W = W2;
  }
  throw PrecisionExhausted("root isolation failed within " + std::to_string(max_bits) +
                           " bits (near-repeated roots?)");
}

}  // namespace hrp
