#include "hrp/expander.hpp"

#include <algorithm>
#include <unordered_map>

#include "hrp/errors.hpp"
#include "hrp/parallel.hpp"
#include "hrp/verify.hpp"

namespace hrp {

std::string to_string(ExpansionStatus s) {
  switch (s) {
    case ExpansionStatus::Zero:
      return "zero";
    case ExpansionStatus::Cycle:
      return "cycle";
    case ExpansionStatus::Budget:
    default:
      return "budget";
  }
}

Expander::Expander(DigitSet digits, std::shared_ptr<const Embedder> emb)
    : digits_(std::move(digits)), emb_(std::move(emb)) {
  if (!(emb_->number().minpoly() == digits_.alpha())) throw InputError("digit set belongs to a different alpha");
  if (emb_->max_degree() < static_cast<std::size_t>(digits_.alpha().degree()))
    throw std::invalid_argument("embedder tables shorter than the degree");
}

Expander::Expander(DigitSet digits, const AlgebraicNumber& a, std::size_t max_degree)
    : Expander(std::move(digits),
               std::make_shared<const Embedder>(
                   a, std::max({max_degree, static_cast<std::size_t>(a.degree()), kDefaultTableDegree}))) {}

std::size_t Expander::select_digit(const IntPoly& beta) const {
  const MinPoly& m = minpoly();
  const Integer coset = mod_floor(beta.constant_term(), m.a0());
  const std::size_t orth = closed_orthant_index(beta, *emb_);
  const auto id = digits_.find(coset, orth);
  if (!id) {
    const AlgebraicNumber& a = emb_->number();
    throw InputError("digit set has no digit for coset " + coset.get_str() + ", orthant " +
                     Orthant::from_index(orth, a.r(), a.s()).label());
  }
  return *id;
}

std::pair<std::size_t, IntPoly> Expander::step(const IntPoly& beta) const {
  const std::size_t id = select_digit(beta);
  return {id, div_by_alpha(beta - digits_[id].rep, minpoly())};
}

std::vector<Interval> Expander::abs_values(const IntPoly& beta) const {
  std::vector<Interval> out;
  for (std::size_t v = 0; v < emb_->number().place_count(); ++v) out.push_back(emb_->place_abs(beta, v));
  return out;
}

ExpansionTrace Expander::expand(const IntPoly& beta0, long max_steps, bool record_values) const {
  if (max_steps < 1) throw std::invalid_argument("max_steps must be positive");
  const int n = minpoly().degree();
  ExpansionTrace t;
  t.beta0 = beta0;
  std::unordered_map<IntPoly, long, IntPolyHash> seen;
  IntPoly beta = beta0;
  std::vector<std::size_t> ids;
  for (long k = 0;; ++k) {
    TraceStep st{beta, std::nullopt, {}};
    if (record_values) st.abs_values = abs_values(beta);
    if (to_field(beta, minpoly()).is_zero()) {
      t.status = ExpansionStatus::Zero;
      t.steps.push_back(std::move(st));
      t.digits_out = std::move(ids);
      return t;
    }
    if (beta.degree() <= n - 1) {
      const auto [it, fresh] = seen.emplace(beta, k);
      if (!fresh) {
        t.status = ExpansionStatus::Cycle;
        t.cycle_entry = it->second;
        t.cycle_period = k - it->second;
        t.steps.push_back(std::move(st));
        ids.resize(static_cast<std::size_t>(t.cycle_entry));
        t.digits_out = std::move(ids);
        t.tail = beta;
        return t;
      }
    }
    if (k == max_steps) {
      t.status = ExpansionStatus::Budget;
      t.steps.push_back(std::move(st));
      t.digits_out = std::move(ids);
      t.tail = beta;
      return t;
    }
    auto [id, next] = step(beta);
    st.digit = id;
    ids.push_back(id);
    t.steps.push_back(std::move(st));
    beta = std::move(next);
  }
}

bool recomposes(const ExpansionTrace& t, const DigitSet& digits) {
  std::vector<IntPoly> word;
  for (std::size_t id : t.digits_out) word.push_back(digits[id].rep);
  word.push_back(t.tail);
  return evaluate_word(word, digits.alpha()) == to_field(t.beta0, digits.alpha());
}

ExpansionTrace expand(const IntPoly& beta0, const DigitSet& digits, const AlgebraicNumber& a, long max_steps) {
  const Expander ex(digits, a, static_cast<std::size_t>(std::max(beta0.degree(), 0)));
  return ex.expand(beta0, max_steps);
}

FieldElem evaluate_word(const std::vector<IntPoly>& word, const MinPoly& m) {
  FieldElem acc = FieldElem::zero(static_cast<std::size_t>(m.degree()));
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = to_field(*it, m) + mul_alpha(acc, m);
  return acc;
}

// ---------------------------------------------------------------------------

std::vector<IntPoly> seeds(const SeedBox& box, int n) {
  std::vector<IntPoly> out;
  if (box.empty() || n < 1) return out;
  std::vector<long> c(static_cast<std::size_t>(n), box.lo);
  for (;;) {
    std::vector<Integer> z(c.begin(), c.end());
    out.emplace_back(std::move(z));
    int j = 0;
    while (j < n && c[j] == box.hi) c[j++] = box.lo;
    if (j == n) break;
    ++c[j];
  }
  return out;
}

namespace {

struct Known {
  long dist;   // steps expand() needs from this state
  long cycle;  // index into the block's cycle list, -1 for zero
};

struct BlockResult {
  std::vector<std::vector<IntPoly>> cycles;
  bool reached_zero = false;
  long zero_count = 0, cycle_count = 0, max_used = 0;
  std::vector<IntPoly> failures;
};

std::vector<IntPoly> rotate_to_least(std::vector<IntPoly> cyc) {
  const auto least = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), least, cyc.end());
  return cyc;
}

}  // namespace

Attractor attractor(const Expander& ex, const SeedBox& box, long max_steps, unsigned requested) {
  const MinPoly& m = ex.minpoly();
  const std::vector<IntPoly> all = seeds(box, m.degree());
  Attractor out;
  out.seed_count = static_cast<long>(all.size());
  if (all.empty()) return out;

  const unsigned workers = requested ? requested : std::max(1u, thread_budget());
  std::vector<BlockResult> blocks(workers);
  parallel_blocks(all.size(), [&](std::size_t begin, std::size_t end, unsigned w) {
    BlockResult& res = blocks[w];
    std::unordered_map<IntPoly, Known, IntPolyHash> memo;
    std::vector<IntPoly> path;
    std::unordered_map<IntPoly, long, IntPolyHash> on_path;
    for (std::size_t i = begin; i < end; ++i) {
      path.clear();
      on_path.clear();
      IntPoly beta = all[i];
      long base = 0, cycle = -1;
      bool failed = false;
      for (;;) {
        if (auto it = memo.find(beta); it != memo.end()) {
          base = it->second.dist;
          cycle = it->second.cycle;
          break;
        }
        if (beta.is_zero()) {
          memo.emplace(beta, Known{0, -1});
          break;
        }
        if (auto it = on_path.find(beta); it != on_path.end()) {
          const long e = it->second;
          const long period = static_cast<long>(path.size()) - e;
          cycle = static_cast<long>(res.cycles.size());
          res.cycles.emplace_back(path.begin() + e, path.end());
          for (long j = e; j < static_cast<long>(path.size()); ++j) memo.emplace(path[j], Known{period, cycle});
          path.resize(static_cast<std::size_t>(e));
          base = period;
          break;
        }
        if (static_cast<long>(path.size()) > max_steps) {
          failed = true;
          break;
        }
        on_path.emplace(beta, static_cast<long>(path.size()));
        path.push_back(beta);
        beta = ex.step(beta).second;
      }
      if (failed) {
        res.failures.push_back(all[i]);
        continue;
      }
      const long len = static_cast<long>(path.size());
      for (long j = 0; j < len; ++j) memo.emplace(path[j], Known{base + len - j, cycle});
      const long total = base + len;
      if (total > max_steps) {
        res.failures.push_back(all[i]);
        continue;
      }
      res.max_used = std::max(res.max_used, total);
      if (cycle < 0) {
        ++res.zero_count;
        res.reached_zero = true;
      } else {
        ++res.cycle_count;
      }
    }
  }, workers);

  std::vector<std::vector<IntPoly>> cycles;
  bool zero = false;
  for (auto& b : blocks) {
    for (auto& c : b.cycles) cycles.push_back(rotate_to_least(std::move(c)));
    zero = zero || b.reached_zero;
    out.zero_count += b.zero_count;
    out.cycle_count += b.cycle_count;
    out.max_steps_used = std::max(out.max_steps_used, b.max_used);
    for (auto& f : b.failures) out.budget_failures.push_back(std::move(f));
  }
  std::sort(cycles.begin(), cycles.end());
  cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
  std::sort(out.budget_failures.begin(), out.budget_failures.end());
  for (const auto& c : cycles) out.states.insert(out.states.end(), c.begin(), c.end());
  if (zero) out.states.emplace_back();
  std::sort(out.states.begin(), out.states.end());
  out.states.erase(std::unique(out.states.begin(), out.states.end()), out.states.end());
  out.cycles = std::move(cycles);
  return out;
}

Representation represent(const IntPoly& beta0, const Expander& ex, const Attractor& A, long max_steps) {
  const ExpansionTrace t = ex.expand(beta0, max_steps, false);
  Representation rep;
  rep.digit_ids = t.digits_out;
  for (std::size_t id : t.digits_out) rep.word.push_back(ex.digits()[id].rep);
  rep.tail = t.tail;
  if (t.status == ExpansionStatus::Zero) {
    rep.status = ExpansionStatus::Zero;
  } else if (t.status == ExpansionStatus::Cycle &&
             std::binary_search(A.states.begin(), A.states.end(), t.tail)) {
    rep.status = ExpansionStatus::Cycle;
    rep.word.push_back(t.tail);
  } else {
    rep.status = ExpansionStatus::Budget;
  }
  std::vector<IntPoly> full = rep.word;
  if (rep.status == ExpansionStatus::Budget) full.push_back(t.tail);
  rep.verified = evaluate_word(full, ex.minpoly()) == to_field(beta0, ex.minpoly());
  return rep;
}

std::optional<long> search_integer_digits(const AlgebraicNumber& a, long bound_m, const std::vector<IntPoly>& region,
                                          int L) {
  if (region.empty()) return 0;
  for (long mm = 0; mm <= bound_m; ++mm) {
    std::vector<IntPoly> F;
    for (long d = -mm; d <= mm; ++d) F.push_back(IntPoly::constant(Integer(d)));
    if (coverage(F, a, region, L).covered) return mm;
  }
  return std::nullopt;
}

}  // namespace hrp
