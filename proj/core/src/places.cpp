#include "hrp/places.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "hrp/errors.hpp"
#include "hrp/qpoly.hpp"

namespace hrp {

Interval max(const Interval& a, const Interval& b) {
  return {a.lo > b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi};
}

Interval operator*(const Interval& a, const Interval& b) { return {a.lo * b.lo, a.hi * b.hi}; }
Interval operator*(const Rational& k, const Interval& a) { return {k * a.lo, k * a.hi}; }

AlgebraicNumber::AlgebraicNumber(MinPoly m, std::vector<RootDisk> roots, unsigned precision)
    : m_(std::move(m)), roots_(std::move(roots)), precision_(precision) {
  for (const auto& z : roots_) {
    if (z.is_real()) {
      places_.push_back(z);
      ++r_;
    }
  }
  for (const auto& z : roots_) {
    if (!z.is_real() && z.im > 0) {
      places_.push_back(z);
      ++s_;
    }
  }
  if (r_ + 2 * s_ != m_.degree()) throw PrecisionExhausted("inconsistent place signature");
}

AlgebraicNumber analyze(const MinPoly& m, unsigned precision) {
  return AlgebraicNumber(m, isolate_roots(m.poly(), precision), precision);
}

AlgebraicNumber AlgebraicNumber::refined(unsigned precision) const {
  if (precision <= precision_) return *this;
  return analyze(m_, precision);
}

std::string to_string(ModulusKind k) {
  switch (k) {
    case ModulusKind::AllUnitModulus:
      return "AllUnitModulus";
    case ModulusKind::AllExpanding:
      return "AllExpanding";
    case ModulusKind::SomeInside:
    default:
      return "SomeInside";
  }
}

bool is_self_reciprocal(const MinPoly& m) {
  const auto n = static_cast<std::size_t>(m.degree());
  bool plus = true, minus = true;
  for (std::size_t j = 0; j <= n; ++j) {
    plus = plus && m.coeff(j) == m.coeff(n - j);
    minus = minus && m.coeff(j) == -m.coeff(n - j);
  }
  return plus || minus;
}

unsigned max_cyclotomic_order(unsigned n) {
  // phi(M) >= sqrt(M / 2), so phi(M) <= n forces M <= 2 n^2.
  unsigned best = 1;
  for (unsigned m = 1; m <= 2 * n * n + 2; ++m) {
    unsigned phi = m, x = m;
    for (unsigned p = 2; p * p <= x; ++p) {
      if (x % p) continue;
      while (x % p == 0) x /= p;
      phi -= phi / p;
    }
    if (x > 1) phi -= phi / x;
    if (phi <= n) best = m;
  }
  return best;
}

namespace {

// For even n = 2d and self-reciprocal p: p(x) = x^d q(x + 1/x).
RatPoly trace_polynomial(const MinPoly& m) {
  const auto d = static_cast<std::size_t>(m.degree() / 2);
  RatPoly q(std::vector<Rational>{Rational(m.coeff(d))});
  RatPoly prev(std::vector<Rational>{Rational(2)});  // x^0 + x^0
  RatPoly cur(std::vector<Rational>{Rational(0), Rational(1)});
  const RatPoly y = cur;
  for (std::size_t k = 1; k <= d; ++k) {
    q = q + Rational(m.coeff(d + k)) * cur;
    RatPoly next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return q;
}

bool all_roots_on_unit_circle(const MinPoly& m) {
  const RatPoly q = trace_polynomial(m);
  const auto d = q.degree();
  if (q.eval(Rational(-2)) == 0 || q.eval(Rational(2)) == 0) return false;
  return count_real_roots(squarefree_part(q), Rational(-2), Rational(2)) == d &&
         squarefree_part(q).degree() == d;
}

bool divides_x_pow_minus_one(const MinPoly& m, unsigned M) {
  std::vector<Rational> c(M + 1);
  c[0] = -1;
  c[M] = 1;
  return divmod(RatPoly(std::move(c)), RatPoly(m.poly())).second.is_zero();
}

}  // namespace

Classification classify(const AlgebraicNumber& a) {
  const MinPoly& m = a.minpoly();
  Classification out{};
  out.self_reciprocal = is_self_reciprocal(m);
  const int n = m.degree();
  if (n == 1) {
    const Integer num = abs(m.a0()), den = m.lead();
    out.kind = num > den ? ModulusKind::AllExpanding : num == den ? ModulusKind::AllUnitModulus : ModulusKind::SomeInside;
  } else if (out.self_reciprocal && n % 2 == 0) {
    // Roots are closed under z -> 1/z: either all on the unit circle, or
    // some pair z, 1/z off it with one member inside.
    out.kind = all_roots_on_unit_circle(m) ? ModulusKind::AllUnitModulus : ModulusKind::SomeInside;
  } else {
    const Rational one(1);
    bool decided = false;
    for (unsigned prec = a.precision(); prec <= kMaxPrecision && !decided; prec *= 2) {
      const AlgebraicNumber cur = a.refined(prec);
      bool all_out = true, some_in = false;
      for (std::size_t v = 0; v < cur.place_count(); ++v) {
        const RootDisk& z = cur.conjugate(v);
        const Rational norm = z.center_norm();
        const Rational up = one + z.radius;
        if (!(norm > up * up)) all_out = false;
        if (z.radius < one) {
          const Rational down = one - z.radius;
          if (norm < down * down) some_in = true;
        }
      }
      if (some_in) {
        out.kind = ModulusKind::SomeInside;
        decided = true;
      } else if (all_out) {
        out.kind = ModulusKind::AllExpanding;
        decided = true;
      }
    }
    if (!decided) throw PrecisionExhausted("could not separate conjugate moduli from 1");
  }
  if (out.kind == ModulusKind::AllUnitModulus) {
    const unsigned mmax = max_cyclotomic_order(static_cast<unsigned>(n));
    for (unsigned M = 1; M <= mmax && !out.is_root_of_unity; ++M) out.is_root_of_unity = divides_x_pow_minus_one(m, M);
  }
  return out;
}

// ---------------------------------------------------------------------------

PlaceTable::PlaceTable(const AlgebraicNumber& a, std::size_t max_degree)
    : q_(a.conjugate(0).exp), max_degree_(max_degree) {
  const std::size_t places = a.place_count();
  re_.assign(places, {});
  im_.assign(places, {});
  err_.assign(places, {});
  const long q = static_cast<long>(q_);
  for (std::size_t v = 0; v < places; ++v) {
    const RootDisk& z = a.conjugate(v);
    if (z.exp != q_) throw std::logic_error("PlaceTable: mixed centre exponents");
    const Rational rho = z.radius;
    const Rational mod_up = sqrt_upper(z.center_norm(), q_) + rho;
    Integer pre = 1, pim = 0;  // C^j, scale 2^(q j)
    Rational growth = 1;       // (|c| + rho)^(j-1)
    for (std::size_t j = 0; j <= max_degree; ++j) {
      if (j == 0) {
        re_[v].push_back(Integer(1) << q_);
        im_[v].push_back(0);
        err_[v].push_back(0);
        continue;
      }
      const Integer nre = pre * z.re - pim * z.im;
      const Integer nim = pre * z.im + pim * z.re;
      pre = nre;
      pim = nim;
      const auto shift = static_cast<mp_bitcnt_t>(q * static_cast<long>(j - 1));
      auto round_shift = [shift](const Integer& x) {
        if (shift == 0) return x;
        Integer r;
        Integer half = Integer(1) << (shift - 1);
        Integer t = x + half;
        mpz_fdiv_q_2exp(r.get_mpz_t(), t.get_mpz_t(), shift);
        return r;
      };
      re_[v].push_back(round_shift(pre));
      im_[v].push_back(round_shift(pim));
      if (j >= 2) growth *= mod_up;
      Rational e = Rational(static_cast<long>(j)) * rho * growth;
      if (j >= 2) e += ldexp(Rational(1), -q);
      err_[v].push_back(ceil(ldexp(e, q)));
    }
  }
}

PlaceTable::Value PlaceTable::evaluate(const IntPoly& p, std::size_t place) const {
  if (p.degree() > static_cast<int>(max_degree_))
    throw std::length_error("PlaceTable: degree " + std::to_string(p.degree()) + " exceeds table degree " +
                            std::to_string(max_degree_));
  Value v{0, 0, 0};
  const auto& re = re_[place];
  const auto& im = im_[place];
  const auto& er = err_[place];
  for (std::size_t j = 0; j < p.size(); ++j) {
    const Integer& b = p.coeffs()[j];
    if (b == 0) continue;
    v.re += b * re[j];
    v.im += b * im[j];
    v.err += abs(b) * er[j];
  }
  return v;
}

ComplexBall PlaceTable::ball(const Value& v) const {
  const long q = static_cast<long>(q_);
  return {ldexp(Rational(v.re), -q), ldexp(Rational(v.im), -q), ldexp(Rational(v.err), -q)};
}

Interval PlaceTable::abs_value(const Value& v, PlaceKind kind) const {
  const long q = static_cast<long>(q_);
  if (kind == PlaceKind::Real) {
    const Integer a = abs(v.re);
    Integer lo = a - v.err;
    if (lo < 0) lo = 0;
    return {ldexp(Rational(lo), -q), ldexp(Rational(Integer(a + v.err)), -q)};
  }
  const Integer n2 = v.re * v.re + v.im * v.im;
  Integer lo = isqrt_floor(n2) - v.err;
  if (lo < 0) lo = 0;
  const Integer hi = isqrt_ceil(n2) + v.err;
  return {ldexp(Rational(Integer(lo * lo)), -2 * q), ldexp(Rational(Integer(hi * hi)), -2 * q)};
}

// ---------------------------------------------------------------------------

Embedder::Embedder(AlgebraicNumber a, std::size_t max_degree) : base_(std::move(a)), max_degree_(max_degree) {
  std::size_t count = 1;
  for (unsigned p = base_.precision(); p * 2 <= kMaxPrecision; p *= 2) ++count;
  levels_.resize(count);
  once_ = std::make_unique<std::once_flag[]>(count);
}

const Embedder::Level& Embedder::level(std::size_t k) const {
  std::call_once(once_[k], [&] {
    AlgebraicNumber num = k == 0 ? base_ : base_.refined(base_.precision() << k);
    PlaceTable table(num, max_degree_);
    levels_[k] = std::make_unique<Level>(Level{std::move(num), std::move(table)});
  });
  return *levels_[k];
}

const PlaceTable& Embedder::table(std::size_t k) const { return level(k).table; }
const AlgebraicNumber& Embedder::number(std::size_t k) const { return level(k).number; }

Interval Embedder::place_abs(const IntPoly& p, std::size_t place) const {
  const PlaceTable& t = table(0);
  return t.abs_value(t.evaluate(p, place), base_.kind(place));
}

namespace {

ComplexBall square(const ComplexBall& b) {
  const Rational mod = sqrt_upper(b.re * b.re + b.im * b.im, 64) ;
  return {b.re * b.re - b.im * b.im, 2 * b.re * b.im, 2 * mod * b.radius + b.radius * b.radius};
}

bool ball_meets_disk(const ComplexBall& b, const RootDisk& d) {
  const Rational dre = b.re - d.center_re(), dim = b.im - d.center_im();
  const Rational reach = b.radius + d.radius;
  return dre * dre + dim * dim <= reach * reach;
}

// sigma(delta) real? `ball_at(level)` encloses sigma(delta).
bool conjugate_is_real(const FieldElem& delta, const MinPoly& m, PlaceKind kind, std::size_t levels,
                       const std::function<ComplexBall(std::size_t)>& ball_at) {
  if (kind == PlaceKind::Real || delta.is_rational()) return true;
  const IntPoly mu = squarefree_part(charpoly(delta, m)).primitive_part();
  if (mu.degree() == m.degree()) return false;  // delta generates Q(alpha), which is not real here
  unsigned prec = 64;
  for (std::size_t k = 0; k < levels; ++k, prec *= 2) {
    const std::vector<RootDisk> disks = isolate_roots(mu, prec);
    const ComplexBall b = ball_at(k);
    const RootDisk* hit = nullptr;
    int hits = 0;
    for (const auto& d : disks)
      if (ball_meets_disk(b, d)) {
        ++hits;
        hit = &d;
      }
    if (hits == 1) return hit->is_real();
  }
  throw BoundaryUndecidable("could not match a conjugate to a root of its minimal polynomial");
}

}  // namespace

bool Embedder::is_real_at(const IntPoly& delta, std::size_t place) const {
  const FieldElem x = to_field(delta, base_.minpoly());
  return conjugate_is_real(x, base_.minpoly(), base_.kind(place), levels_.size(), [&](std::size_t k) {
    const PlaceTable& t = table(k);
    return t.ball(t.evaluate(delta, place));
  });
}

int Embedder::coordinate_sign(const IntPoly& p, std::size_t place, bool imaginary) const {
  const MinPoly& m = base_.minpoly();
  bool checked_zero = false;
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    const PlaceTable& t = table(k);
    const PlaceTable::Value v = t.evaluate(p, place);
    const Integer& x = imaginary ? v.im : v.re;
    if (abs(x) > v.err) return sgn(x);
    if (checked_zero) continue;
    checked_zero = true;
    const FieldElem fx = to_field(p, m);
    if (fx.is_zero()) return 0;
    if (base_.kind(place) == PlaceKind::Real) continue;  // non-zero at a real place: refine
    if (imaginary) {
      if (is_real_at(p, place)) return 0;
      continue;
    }
    // Re(w) = 0 iff w^2 is real and negative.
    auto sq_ball = [&](std::size_t lvl) {
      const PlaceTable& tl = table(lvl);
      return square(tl.ball(tl.evaluate(p, place)));
    };
    const FieldElem f2 = mul(fx, fx, m);
    if (conjugate_is_real(f2, m, PlaceKind::Complex, levels_.size(), sq_ball)) {
      for (std::size_t lvl = 0; lvl < levels_.size(); ++lvl) {
        const ComplexBall b = sq_ball(lvl);
        if (b.re < -b.radius) return 0;
        if (b.re > b.radius) break;  // positive real square: Re(w) != 0
      }
    }
  }
  throw BoundaryUndecidable("sign of an embedding coordinate undecided at " + std::to_string(kMaxPrecision) +
                            " bits");
}

int Embedder::real_sign(const IntPoly& p, std::size_t place) const { return coordinate_sign(p, place, false); }

std::pair<int, int> Embedder::complex_signs(const IntPoly& p, std::size_t place) const {
  return {coordinate_sign(p, place, false), coordinate_sign(p, place, true)};
}

// ---------------------------------------------------------------------------

EmbeddingPoint embed(const IntPoly& p, const AlgebraicNumber& a, unsigned precision) {
  const std::size_t deg = static_cast<std::size_t>(std::max(p.degree(), 0));
  const Rational target = ldexp(Rational(1), -static_cast<long>(precision));
  const unsigned coeff_bits = static_cast<unsigned>(mpz_sizeinbase(Integer(p.height() + 1).get_mpz_t(), 2));
  for (unsigned work = std::max(a.precision(), precision + coeff_bits + 8 * static_cast<unsigned>(deg) + 16);;
       work *= 2) {
    const AlgebraicNumber cur = a.refined(work);
    const PlaceTable t(cur, deg);
    EmbeddingPoint out;
    bool ok = true;
    for (std::size_t v = 0; v < cur.place_count() && ok; ++v) {
      const ComplexBall b = t.ball(t.evaluate(p, v));
      ok = b.radius <= target;
      (cur.kind(v) == PlaceKind::Real ? out.reals : out.complexes).push_back(b);
    }
    if (ok) return out;
    if (work > 4 * kMaxPrecision) throw PrecisionExhausted("embed: radius target not reached");
  }
}

Interval place_abs(const IntPoly& p, const AlgebraicNumber& a, std::size_t place, unsigned precision) {
  if (place >= a.place_count()) throw std::out_of_range("place index out of range");
  const std::size_t deg = static_cast<std::size_t>(std::max(p.degree(), 0));
  const unsigned work = std::max(a.precision(), precision);
  const AlgebraicNumber cur = a.refined(work);
  const PlaceTable t(cur, deg);
  return t.abs_value(t.evaluate(p, place), cur.kind(place));
}

}  // namespace hrp
