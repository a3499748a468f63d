#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hrp/digitset.hpp"
#include "hrp/errors.hpp"
#include "hrp/expander.hpp"
#include "hrp/places.hpp"
#include "hrp/qpoly.hpp"
#include "hrp/verify.hpp"

using namespace hrp;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int n, const std::function<Outcome()>& body, double limit_seconds) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool in_time = limit_seconds <= 0 || secs < limit_seconds;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs", secs);
  std::string limit;
  if (limit_seconds > 0) limit = " of " + std::to_string(static_cast<int>(limit_seconds)) + "s";
  std::printf("criterion %d %s (%s; %s%s)\n", n, pass ? "PASS" : "FAIL", o.detail.c_str(), buf, limit.c_str());
  std::fflush(stdout);
}

MinPoly M(std::initializer_list<long> c) { return MinPoly(IntPoly(c)); }

struct Setup {
  std::string name;
  AlgebraicNumber a;
  std::shared_ptr<const Embedder> emb;
  DigitSet F;
  Expander ex;
};

std::unique_ptr<Setup> make_setup(const std::string& name, const MinPoly& m) {
  AlgebraicNumber a = analyze(m);
  auto emb = std::make_shared<const Embedder>(a, std::max<std::size_t>(kDefaultTableDegree, 6));
  DigitSet F = build_digit_set(*emb);
  Expander ex(F, emb);
  return std::make_unique<Setup>(Setup{name, std::move(a), emb, std::move(F), std::move(ex)});
}

IntPoly random_beta(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 6);
  std::uniform_int_distribution<long> coef(-10, 10);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return IntPoly(std::move(c));
}

std::vector<IntPoly> alphabet_of(const Expander& ex, const Attractor& A) {
  std::vector<IntPoly> out;
  for (const auto& d : ex.digits().digits()) out.push_back(d.rep);
  out.insert(out.end(), A.states.begin(), A.states.end());
  return out;
}

// sum eps_j x^j + x^k tail - beta is a multiple of M in Q[x].
bool divides_difference(const ExpansionTrace& t, const DigitSet& F, const IntPoly& beta) {
  IntPoly sum;
  for (std::size_t j = 0; j < t.digits_out.size(); ++j) sum += F[t.digits_out[j]].rep.shifted(j);
  sum += t.tail.shifted(t.digits_out.size());
  return divmod(RatPoly(sum - beta), RatPoly(F.alpha().poly())).second.is_zero();
}

std::string cli_output(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, MinPoly>> fields = {
      {"x-2", M({-2, 1})},          {"2x-3", M({-3, 2})},       {"x^2-2x+2", M({2, -2, 1})},
      {"x^2+1", M({1, 0, 1})},      {"5x^2-6x+5", M({5, -6, 5})}, {"x^3-2x-2", M({-2, -2, 0, 1})}};

  std::vector<std::unique_ptr<Setup>> setups;

  report(
      1,
      [&] {
        Outcome o{true, ""};
        const Classification cubic = classify(analyze(M({-2, -2, 0, 1})));
        if (cubic.kind != ModulusKind::AllExpanding) return Outcome{false, "x^3-2x-2 is not expanding"};
        for (const auto& [name, m] : fields) {
          setups.push_back(make_setup(name, m));
          const DigitSet& F = setups.back()->F;
          const bool ok = Integer(static_cast<unsigned long>(F.size())) <= F.cardinality_bound();
          o.pass = o.pass && ok;
          if (!o.detail.empty()) o.detail += ", ";
          o.detail += name + " " + std::to_string(F.size()) + "<=" + F.cardinality_bound().get_str();
        }
        return o;
      },
      120);

  long audited_steps = 0, audit_violations = 0;
  report(
      2,
      [&] {
        if (setups.size() != fields.size()) return Outcome{false, "digit sets missing"};
        long ok = 0, total = 0;
        for (const auto& s : setups) {
          std::mt19937_64 rng(20240601);
          for (int i = 0; i < 200; ++i) {
            const IntPoly beta = random_beta(rng);
            const ExpansionTrace t = s->ex.expand(beta);
            ++total;
            const bool sums = t.status != ExpansionStatus::Budget && recomposes(t, s->F) &&
                              divides_difference(t, s->F, beta);
            if (sums) ++ok;
            const AuditReport r = audit_trace(t, s->F, *s->emb, Rational(1, 1000000000));
            audited_steps += static_cast<long>(r.entries.size());
            audit_violations += r.decrease_violations + r.sign_violations + r.angle_violations + r.digit_violations;
          }
        }
        return Outcome{ok == total, std::to_string(ok) + "/" + std::to_string(total) + " exact"};
      },
      300);

  report(
      3,
      [&] {
        return Outcome{audited_steps > 0 && audit_violations == 0,
                       std::to_string(audited_steps) + " place checks, " + std::to_string(audit_violations) +
                           " violations at tol 1e-9"};
      },
      0);

  report(
      4,
      [&] {
        if (setups.size() != fields.size()) return Outcome{false, "digit sets missing"};
        long seeds = 0, budget = 0, longest = 0;
        for (const auto& s : setups) {
          const Attractor A = attractor(s->ex, SeedBox::symmetric(20), 10000);
          seeds += A.seed_count;
          budget += static_cast<long>(A.budget_failures.size());
          longest = std::max(longest, A.max_steps_used);
        }
        return Outcome{budget == 0, std::to_string(seeds) + " seeds, " + std::to_string(budget) +
                                        " budget, longest " + std::to_string(longest) + " steps"};
      },
      0);

  report(
      5,
      [&] {
        struct Case {
          MinPoly m;
          ModulusKind kind;
          bool root_of_unity;
        };
        const std::vector<Case> cases = {{M({-1, -1, 1}), ModulusKind::SomeInside, false},
                                         {M({1, -3, 1}), ModulusKind::SomeInside, false},
                                         {M({5, -6, 5}), ModulusKind::AllUnitModulus, false},
                                         {M({1, 0, 1}), ModulusKind::AllUnitModulus, true},
                                         {M({2, -2, 1}), ModulusKind::AllExpanding, false},
                                         {M({-3, 2}), ModulusKind::AllExpanding, false},
                                         {M({-2, 1}), ModulusKind::AllExpanding, false}};
        int ok = 0;
        for (const auto& c : cases) {
          const Classification r = classify(analyze(c.m));
          const bool match = r.kind == c.kind && (c.kind != ModulusKind::AllUnitModulus ||
                                                   r.is_root_of_unity == c.root_of_unity);
          ok += match ? 1 : 0;
        }
        return Outcome{ok == static_cast<int>(cases.size()),
                       std::to_string(ok) + "/" + std::to_string(cases.size()) + " certified"};
      },
      0);

  report(
      6,
      [&] {
        const MinPoly m = M({-2, 1});
        const std::vector<IntPoly> F = {IntPoly{0}, IntPoly{1}, IntPoly{-1}};
        const std::vector<FieldElem> words = enumerate_words(F, m, 11);
        const std::set<FieldElem> ws(words.begin(), words.end());
        long missing = 0;
        for (long k = -1000; k <= 1000; ++k) missing += ws.count(FieldElem::rational(1, Rational(k))) ? 0 : 1;
        const CoverageReport bfs = coverage(F, analyze(m), coefficient_box(1, -1000, 1000), 32);
        return Outcome{missing == 0 && bfs.covered,
                       std::to_string(2001 - missing) + "/2001 by words of length <= 11, BFS length " +
                           std::to_string(bfs.length_used)};
      },
      60);

  report(
      7,
      [&] {
        Outcome o{true, ""};
        for (const auto& [name, m] : std::vector<std::pair<std::string, MinPoly>>{{"1+i", M({2, -2, 1})},
                                                                                  {"2", M({-2, 1})}}) {
          const auto s = make_setup(name, m);
          const int n = m.degree();
          const std::vector<IntPoly> box = coefficient_box(n, -4, 4);
          const Attractor A = attractor(s->ex, SeedBox::symmetric(20));
          const CoverageReport bfs = coverage(alphabet_of(s->ex, A), s->a, box, 32);
          long agree = 0;
          for (const auto& beta : box) {
            const Representation r = represent(beta, s->ex, A);
            const bool by_expander = r.status != ExpansionStatus::Budget && r.verified &&
                                     evaluate_word(r.word, m) == to_field(beta, m);
            const bool by_bfs = std::find(bfs.misses.begin(), bfs.misses.end(), to_field(beta, m)) == bfs.misses.end();
            agree += (by_expander && by_bfs) ? 1 : 0;
          }
          const bool ok = bfs.covered && agree == static_cast<long>(box.size());
          o.pass = o.pass && ok;
          if (!o.detail.empty()) o.detail += "; ";
          o.detail += name + ": BFS length " + std::to_string(bfs.length_used) + ", " + std::to_string(agree) + "/" +
                      std::to_string(box.size()) + " agree";
        }
        return o;
      },
      0);

  report(
      8,
      [&] {
        const std::vector<std::vector<std::string>> runs = {
            {"digits", "--minpoly", "-2,-2,0,1"},
            {"digits", "--minpoly", "5,-6,5"},
            {"expand", "--minpoly", "5,-6,5", "--beta", "1,2"},
            {"expand", "--minpoly", "-2,-2,0,1", "--beta", "7,-3,5,1,-9"}};
        int same = 0;
        for (const auto& args : runs) {
          int c1 = -1, c2 = -1;
          const std::string a = cli_output(args, c1);
          const std::string b = cli_output(args, c2);
          same += (c1 == cli::kOk && c2 == cli::kOk && !a.empty() && a == b) ? 1 : 0;
        }
        return Outcome{same == static_cast<int>(runs.size()),
                       std::to_string(same) + "/" + std::to_string(runs.size()) + " byte-identical"};
      },
      0);

  return failures == 0 ? 0 : 1;
}
