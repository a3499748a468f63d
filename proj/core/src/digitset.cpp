#include "hrp/digitset.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "hrp/errors.hpp"
#include "hrp/lattice.hpp"
#include "hrp/parallel.hpp"

namespace hrp {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

}  // namespace

Orthant Orthant::from_index(std::size_t index, int r, int s) {
  if (index >= count(r, s)) throw std::out_of_range("orthant index out of range");
  Orthant u;
  for (int i = 0; i < r; ++i, index >>= 1) u.real_signs.push_back(index & 1 ? -1 : 1);
  for (int j = 0; j < s; ++j, index >>= 2) u.quadrants.push_back(static_cast<int>(index & 3) + 1);
  return u;
}

std::size_t Orthant::index() const {
  std::size_t idx = 0, shift = 0;
  for (int sg : real_signs) idx |= std::size_t{sg < 0} << shift++;
  for (int q : quadrants) {
    idx |= static_cast<std::size_t>(q - 1) << shift;
    shift += 2;
  }
  return idx;
}

std::string Orthant::label() const {
  std::string out;
  for (int sg : real_signs) out += sg < 0 ? '-' : '+';
  out += '|';
  for (int q : quadrants) {
    out += 'q';
    out += static_cast<char>('0' + q);
  }
  return out;
}

Orthant Orthant::parse(std::string_view label, int r, int s) {
  const auto bar = label.find('|');
  if (bar == std::string_view::npos || bar != static_cast<std::size_t>(r) ||
      label.size() != static_cast<std::size_t>(r + 1 + 2 * s))
    throw InputError("bad orthant label '" + std::string(label) + "'");
  Orthant u;
  for (int i = 0; i < r; ++i) {
    if (label[i] != '+' && label[i] != '-') throw InputError("bad orthant label '" + std::string(label) + "'");
    u.real_signs.push_back(label[i] == '-' ? -1 : 1);
  }
  for (int j = 0; j < s; ++j) {
    const char qc = label[bar + 1 + 2 * j], d = label[bar + 2 + 2 * j];
    if (qc != 'q' || d < '1' || d > '4') throw InputError("bad orthant label '" + std::string(label) + "'");
    u.quadrants.push_back(d - '0');
  }
  return u;
}

int quadrant_of(int re_sign, int im_sign) {
  if (im_sign > 0) return re_sign < 0 ? 2 : 1;
  if (im_sign < 0) return re_sign > 0 ? 4 : 3;
  return re_sign < 0 ? 2 : 1;
}

// ---------------------------------------------------------------------------

DigitSet::DigitSet(MinPoly alpha, int r, int s, std::vector<Digit> digits)
    : alpha_(std::move(alpha)), r_(r), s_(s), digits_(std::move(digits)), c_(0) {
  const Integer idx = alpha_.norm_index();
  if (!idx.fits_ulong_p() || idx.get_ui() > (std::size_t{1} << 24))
    throw InputError("|M(0)| too large for a digit table");
  const std::size_t orth = Orthant::count(r_, s_);
  lookup_.assign(idx.get_ui() * orth, kNone);
  for (std::size_t id = 0; id < digits_.size(); ++id) {
    const Digit& d = digits_[id];
    if (d.coset < 0 || d.coset >= idx) throw InputError("digit coset out of range");
    std::size_t& slot = lookup_[d.coset.get_ui() * orth + d.orthant.index()];
    if (slot != kNone) throw InputError("two digits for coset " + d.coset.get_str() + ", orthant " + d.orthant.label());
    slot = id;
    for (const auto& iv : d.c_per_place)
      if (iv.hi > c_) c_ = iv.hi;
  }
}

Integer DigitSet::cardinality_bound() const {
  Integer b = alpha_.norm_index();
  b <<= static_cast<mp_bitcnt_t>(alpha_.degree());
  return b;
}

std::optional<std::size_t> DigitSet::find(const Integer& coset, std::size_t orthant_index) const {
  const std::size_t orth = Orthant::count(r_, s_);
  if (coset < 0 || coset >= alpha_.norm_index() || orthant_index >= orth) return std::nullopt;
  const std::size_t id = lookup_[coset.get_ui() * orth + orthant_index];
  if (id == kNone) return std::nullopt;
  return id;
}

std::vector<Integer> coset_representatives(const MinPoly& m, bool minimize) {
  std::vector<Integer> out;
  for (Integer k = 0; k < m.norm_index(); ++k) {
    if (minimize) {
      bool dup = false;
      for (const auto& j : out) dup = dup || in_alpha_zalpha_search(IntPoly::constant(Integer(k - j)), m);
      if (dup) continue;
    }
    out.push_back(k);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Measured {
  std::vector<int> real_signs;
  std::vector<int> quadrants;
  Rational margin;
  std::vector<Interval> c_per_place;
  std::vector<Rational> sin_gap;
  Interval key;  // max place value
};

// Certified strict interiority at one table level; nullopt if some
// coordinate cannot be separated from zero there.
std::optional<Measured> measure(const IntPoly& rep, const PlaceTable& t, const AlgebraicNumber& a) {
  Measured out;
  Integer clearance;
  bool first = true;
  auto note = [&](const Integer& c) {
    if (first || c < clearance) clearance = c;
    first = false;
  };
  for (std::size_t v = 0; v < a.place_count(); ++v) {
    const PlaceTable::Value x = t.evaluate(rep, v);
    const Interval absv = t.abs_value(x, a.kind(v));
    out.key = v == 0 ? absv : max(out.key, absv);
    const Integer are = abs(x.re);
    if (are <= x.err) return std::nullopt;
    note(Integer(are - x.err));
    if (a.kind(v) == PlaceKind::Real) {
      out.real_signs.push_back(sgn(x.re));
      out.c_per_place.push_back(Rational(2) * absv);
      continue;
    }
    const Integer aim = abs(x.im);
    if (aim <= x.err) return std::nullopt;
    note(Integer(aim - x.err));
    out.quadrants.push_back(quadrant_of(sgn(x.re), sgn(x.im)));
    const Integer lo_coord = std::min(are, aim);
    const Integer n2 = x.re * x.re + x.im * x.im;
    const Integer mod_hi = isqrt_ceil(n2) + x.err;
    const Integer mod_lo = isqrt_floor(n2) - x.err;
    const Rational sin_lo(Integer(lo_coord - x.err), mod_hi);
    Rational sin_hi(1);
    if (mod_lo > 0) {
      const Rational cand(Integer(lo_coord + x.err), mod_lo);
      if (cand < sin_hi) sin_hi = cand;
    }
    out.sin_gap.push_back(sin_lo);
    // (|eps| (1 + 1/sin))^2 from the end-points of |eps|^2 and sin.
    const Rational up = absv.hi * (1 + 1 / sin_lo) * (1 + 1 / sin_lo);
    const Rational down = absv.lo * (1 + 1 / sin_hi) * (1 + 1 / sin_hi);
    out.c_per_place.push_back({down, up});
  }
  out.margin = ldexp(Rational(clearance), -static_cast<long>(t.scale_bits()));
  return out;
}

Digit make_digit(IntPoly rep, const Integer& coset, const MinPoly& m, Measured ms) {
  Digit d;
  d.h = div_by_alpha(rep - IntPoly::constant(coset), m);
  d.rep = std::move(rep);
  d.coset = coset;
  d.orthant.real_signs = std::move(ms.real_signs);
  d.orthant.quadrants = std::move(ms.quadrants);
  d.margin = std::move(ms.margin);
  d.c_per_place = std::move(ms.c_per_place);
  d.sin_gap = std::move(ms.sin_gap);
  return d;
}

bool inside(const Measured& ms, const Orthant& u) {
  return ms.real_signs == u.real_signs && ms.quadrants == u.quadrants;
}

}  // namespace

Digit find_digit(const Integer& r, const Orthant& orthant, const Embedder& emb, long budget) {
  const AlgebraicNumber& a = emb.number();
  const MinPoly& m = a.minpoly();
  const int n = m.degree();
  if (static_cast<int>(emb.max_degree()) < n) throw std::invalid_argument("find_digit: embedder degree < n");
  if (orthant.real_signs.size() != static_cast<std::size_t>(a.r()) ||
      orthant.quadrants.size() != static_cast<std::size_t>(a.s()))
    throw InputError("orthant shape does not match the place signature");
  const PlaceTable& t = emb.table(0);
  long attempted = 0;
  for (long B = 1; B <= budget; B *= 2) {
    attempted = B;
    std::vector<long> h(static_cast<std::size_t>(n), -B);
    struct Hit {
      IntPoly h;
      IntPoly rep;
      Measured ms;
    };
    std::vector<Hit> hits;
    for (;;) {
      std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
      c[0] = r;
      for (int j = 0; j < n; ++j) c[j + 1] = h[j];
      IntPoly rep(std::move(c));
      if (!rep.is_zero()) {
        if (auto ms = measure(rep, t, a); ms && inside(*ms, orthant)) {
          std::vector<Integer> hc(h.begin(), h.end());
          hits.push_back({IntPoly(std::move(hc)), std::move(rep), std::move(*ms)});
        }
      }
      int j = 0;
      while (j < n && h[j] == B) h[j++] = -B;
      if (j == n) break;
      ++h[j];
    }
    if (hits.empty()) continue;
    Rational best_hi = hits.front().ms.key.hi;
    for (const auto& x : hits)
      if (x.ms.key.hi < best_hi) best_hi = x.ms.key.hi;
    const Hit* win = nullptr;
    for (const auto& x : hits) {
      if (x.ms.key.lo > best_hi) continue;
      if (!win || lex_less(x.h, win->h, static_cast<std::size_t>(n))) win = &x;
    }
    return make_digit(win->rep, r, m, win->ms);
  }
  throw SearchExhausted("no digit for coset " + r.get_str() + ", orthant " + orthant.label() +
                            " within coefficient radius " + std::to_string(attempted),
                        attempted);
}

Digit find_digit(const Integer& r, const Orthant& orthant, const AlgebraicNumber& a, long budget) {
  const Embedder emb(a, static_cast<std::size_t>(a.degree()));
  return find_digit(r, orthant, emb, budget);
}

Digit certify_digit(const IntPoly& rep, const Embedder& emb) {
  const AlgebraicNumber& a = emb.number();
  const MinPoly& m = a.minpoly();
  if (to_field(rep, m).is_zero()) throw InputError("zero is not a digit");
  const Integer coset = mod_floor(rep.constant_term(), m.a0());
  for (std::size_t k = 0; k < emb.level_count(); ++k) {
    if (auto ms = measure(rep, emb.table(k), emb.number(k)))
      return make_digit(rep, coset, m, std::move(*ms));
    // A coordinate that is exactly zero never separates.
    for (std::size_t v = 0; v < a.place_count(); ++v) {
      if (a.kind(v) == PlaceKind::Real) continue;
      const auto [sr, si] = emb.complex_signs(rep, v);
      if (sr == 0 || si == 0) throw InputError("digit " + rep.to_string() + " lies on an orthant boundary");
    }
  }
  throw InputError("digit " + rep.to_string() + " not certified inside an orthant");
}

DigitSet build_digit_set(const Embedder& emb, long budget, unsigned workers) {
  const AlgebraicNumber& a = emb.number();
  if (!classify(a).has_hrp()) throw InputError("alpha has a conjugate strictly inside the unit circle");
  const std::vector<Integer> reps = coset_representatives(a.minpoly());
  const std::size_t orth = Orthant::count(a.r(), a.s());
  std::vector<std::optional<Digit>> slots(reps.size() * orth);
  parallel_for(slots.size(), [&](std::size_t i) {
    slots[i] = find_digit(reps[i / orth], Orthant::from_index(i % orth, a.r(), a.s()), emb, budget);
  }, workers);
  std::vector<Digit> digits;
  digits.reserve(slots.size());
  for (auto& d : slots) digits.push_back(std::move(*d));
  return DigitSet(a.minpoly(), a.r(), a.s(), std::move(digits));
}

DigitSet build_digit_set(const AlgebraicNumber& a, long budget) {
  const Embedder emb(a, static_cast<std::size_t>(a.degree()));
  return build_digit_set(emb, budget);
}

std::size_t closed_orthant_index(const IntPoly& p, const Embedder& emb) {
  const AlgebraicNumber& a = emb.number();
  Orthant u;
  for (std::size_t v = 0; v < a.place_count(); ++v) {
    if (a.kind(v) == PlaceKind::Real) {
      u.real_signs.push_back(emb.real_sign(p, v) < 0 ? -1 : 1);
    } else {
      const auto [sr, si] = emb.complex_signs(p, v);
      u.quadrants.push_back(quadrant_of(sr, si));
    }
  }
  return u.index();
}

}  // namespace hrp
