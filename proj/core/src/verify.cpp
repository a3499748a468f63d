#include "hrp/verify.hpp"

#include <algorithm>
#include <unordered_set>

#include "hrp/errors.hpp"

namespace hrp {

namespace {

using ElemSet = std::unordered_set<FieldElem, FieldElemHash>;

std::vector<FieldElem> sorted(const ElemSet& s) {
  std::vector<FieldElem> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FieldElem> to_fields(const std::vector<IntPoly>& ps, const MinPoly& m) {
  std::vector<FieldElem> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(to_field(p, m));
  return out;
}

void check_guard(std::size_t generated, std::size_t guard) {
  if (generated > guard) throw GuardExceeded("word enumeration exceeded " + std::to_string(guard) + " states");
}

// Upper (or lower) bound of |x| at a place, not squared.
class PlaceBounds {
 public:
  explicit PlaceBounds(const AlgebraicNumber& a)
      : a_(a), table_(a, static_cast<std::size_t>(std::max(a.degree() - 1, 0))) {}

  Interval abs(const FieldElem& x, std::size_t v) const {
    Integer den;
    const IntPoly p = clear_denominators(x, den);
    const Interval sq = table_.abs_value(table_.evaluate(p, v), a_.kind(v));
    if (a_.kind(v) == PlaceKind::Real) return {sq.lo / den, sq.hi / den};
    return {sqrt_lower(sq.lo, 64) / den, sqrt_upper(sq.hi, 64) / den};
  }

 private:
  const AlgebraicNumber& a_;
  PlaceTable table_;
};

}  // namespace

std::vector<FieldElem> enumerate_words(const std::vector<IntPoly>& F, const MinPoly& m, int L, std::size_t guard) {
  const std::size_t n = static_cast<std::size_t>(m.degree());
  const std::vector<FieldElem> digits = to_fields(F, m);
  ElemSet all{FieldElem::zero(n)};
  ElemSet level{FieldElem::zero(n)};
  std::size_t generated = 1;
  for (int l = 1; l <= L && !digits.empty(); ++l) {
    ElemSet next;
    for (const auto& w : level) {
      const FieldElem aw = mul_alpha(w, m);
      for (const auto& f : digits) {
        next.insert(f + aw);
        check_guard(++generated, guard);
      }
    }
    if (next == level) break;
    all.insert(next.begin(), next.end());
    level = std::move(next);
  }
  return sorted(all);
}

std::vector<IntPoly> coefficient_box(int n, long lo, long hi) { return seeds(SeedBox{lo, hi}, n); }

CoverageReport coverage(const std::vector<IntPoly>& F, const AlgebraicNumber& a, const std::vector<IntPoly>& region,
                        int L, std::size_t guard, const std::string& description) {
  const MinPoly& m = a.minpoly();
  const std::size_t n = static_cast<std::size_t>(m.degree());
  const std::vector<FieldElem> digits = to_fields(F, m);
  CoverageReport rep;
  rep.max_length = L;
  rep.region = description;
  {
    ElemSet distinct(digits.begin(), digits.end());
    rep.alphabet_size = distinct.size();
  }
  ElemSet pending;
  for (const auto& x : region) pending.insert(to_field(x, m));
  rep.region_size = pending.size();

  // Pruning radius per place for expanding alpha:
  // 1.001 (max |x_p| + max |f_p| / (|alpha_p| - 1)) + 1.
  std::optional<PlaceBounds> bounds;
  std::vector<Rational> radius;
  if (classify(a).kind == ModulusKind::AllExpanding && !pending.empty()) {
    bounds.emplace(a);
    const FieldElem alpha = to_field(IntPoly{0, 1}, m);
    for (std::size_t v = 0; v < a.place_count(); ++v) {
      Rational reg = 0, dig = 0;
      for (const auto& x : pending) reg = std::max(reg, bounds->abs(x, v).hi);
      for (const auto& f : digits) dig = std::max(dig, bounds->abs(f, v).hi);
      const Rational gap = bounds->abs(alpha, v).lo - 1;
      if (gap <= 0) {
        bounds.reset();
        radius.clear();
        break;
      }
      radius.push_back(Rational(1001, 1000) * (reg + dig / gap) + 1);
    }
  }
  auto keep = [&](const FieldElem& w) {
    if (!bounds) return true;
    for (std::size_t v = 0; v < radius.size(); ++v)
      if (bounds->abs(w, v).lo > radius[v]) return false;
    return true;
  };

  ElemSet level{FieldElem::zero(n)};
  std::size_t generated = 1;
  auto mark = [&](const ElemSet& s) {
    for (const auto& w : s) pending.erase(w);
  };
  mark(level);
  int l = 0;
  if (pending.empty()) rep.length_used = 0;
  for (l = 1; l <= L && !pending.empty() && !digits.empty(); ++l) {
    ElemSet next;
    for (const auto& w : level) {
      const FieldElem aw = mul_alpha(w, m);
      for (const auto& f : digits) {
        FieldElem x = f + aw;
        check_guard(++generated, guard);
        if (keep(x)) next.insert(std::move(x));
      }
    }
    check_guard(next.size(), guard);
    mark(next);
    if (pending.empty()) rep.length_used = l;
    if (next == level) break;
    level = std::move(next);
  }
  rep.covered = pending.empty();
  rep.misses = sorted(pending);
  return rep;
}

NumberSystemReport number_system_check(const std::vector<IntPoly>& F, const AlgebraicNumber& a,
                                       const std::vector<IntPoly>& region, int L, std::size_t guard) {
  const MinPoly& m = a.minpoly();
  const std::size_t n = static_cast<std::size_t>(m.degree());
  NumberSystemReport out;
  const std::vector<FieldElem> fs = to_fields(F, m);
  const ElemSet distinct(fs.begin(), fs.end());
  ElemSet canon;
  for (Integer k = 0; k < m.norm_index(); ++k) canon.insert(FieldElem::rational(n, Rational(k)));
  out.card_ok = distinct.count(FieldElem::zero(n)) == 1 && Integer(static_cast<unsigned long>(distinct.size())) == m.norm_index();
  out.canonical = distinct == canon;
  out.covered = coverage(F, a, region, L, guard).covered;
  out.is_candidate = out.card_ok && out.covered;
  return out;
}

// ---------------------------------------------------------------------------

AuditReport audit_trace(const ExpansionTrace& t, const DigitSet& F, const Embedder& emb, const Rational& tolerance) {
  const AlgebraicNumber& a = emb.number();
  const MinPoly& m = a.minpoly();
  AuditReport rep;
  rep.recomposition = recomposes(t, F);
  const PlaceTable& table = emb.table(0);
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    const TraceStep& st = t.steps[k];
    if (!st.digit) continue;
    if (*st.digit >= F.size()) {
      ++rep.digit_violations;
      continue;
    }
    const Digit& d = F[*st.digit];
    const IntPoly& beta = st.beta;
    if (mod_floor(beta.constant_term(), m.a0()) != d.coset) {
      ++rep.digit_violations;
      continue;
    }
    IntPoly next;
    try {
      next = div_by_alpha(beta - d.rep, m);
    } catch (const DivisibilityError&) {
      ++rep.digit_violations;
      continue;
    }
    if (k + 1 < t.steps.size() && !(to_field(next, m) == to_field(t.steps[k + 1].beta, m))) ++rep.digit_violations;

    std::size_t complex_index = 0;
    for (std::size_t v = 0; v < a.place_count(); ++v) {
      AuditEntry e;
      e.step = static_cast<long>(k);
      e.place = v;
      e.before = emb.place_abs(beta, v);
      e.after = emb.place_abs(next, v);
      e.bound = std::max(e.before.lo, F.c());
      e.pass = e.after.hi < e.bound + tolerance;
      if (!e.pass) ++rep.decrease_violations;
      rep.entries.push_back(std::move(e));

      if (a.kind(v) == PlaceKind::Real) {
        const int sb = to_field(beta, m).is_zero() ? 0 : emb.real_sign(beta, v);
        if (sb * d.orthant.real_signs[v] < 0) ++rep.sign_violations;
        continue;
      }
      // Re(beta conj(eps)) >= |beta| |eps| sin(eta) - tol.
      const ComplexBall b = table.ball(table.evaluate(beta, v));
      const ComplexBall ep = table.ball(table.evaluate(d.rep, v));
      const Rational bmod = sqrt_upper(b.re * b.re + b.im * b.im, 64) + b.radius;
      const Rational emod = sqrt_upper(ep.re * ep.re + ep.im * ep.im, 64) + ep.radius;
      const Rational dot = b.re * ep.re + b.im * ep.im - (bmod * ep.radius + emod * b.radius + b.radius * ep.radius);
      if (dot < bmod * emod * d.sin_gap[complex_index] - tolerance) ++rep.angle_violations;
      ++complex_index;
    }
  }
  return rep;
}

}  // namespace hrp
