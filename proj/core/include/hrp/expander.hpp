#pragma once

// The division iteration beta -> (beta - eps) / alpha, attractor discovery
// over a seed box, and finite representations over F together with the
// attractor states.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hrp/digitset.hpp"
#include "hrp/intpoly.hpp"
#include "hrp/places.hpp"

namespace hrp {

inline constexpr long kDefaultMaxSteps = 10000;
inline constexpr long kDefaultSeedRadius = 20;
// Smallest table degree an Expander is built with.
inline constexpr std::size_t kDefaultTableDegree = 12;

enum class ExpansionStatus { Zero, Cycle, Budget };
std::string to_string(ExpansionStatus s);

struct TraceStep {
  IntPoly beta;
  std::optional<std::size_t> digit;  // empty on the final recorded state
  std::vector<Interval> abs_values;
};

struct ExpansionTrace {
  IntPoly beta0;
  std::vector<TraceStep> steps;
  ExpansionStatus status = ExpansionStatus::Budget;
  // Cycle only: index of the first state on the cycle and its length.
  long cycle_entry = -1;
  long cycle_period = 0;
  std::vector<std::size_t> digits_out;
  IntPoly tail;
};

class Expander {
 public:
  Expander(DigitSet digits, std::shared_ptr<const Embedder> emb);
  // Builds its own embedder with tables up to degree
  // max(max_degree, n, kDefaultTableDegree).
  Expander(DigitSet digits, const AlgebraicNumber& a, std::size_t max_degree = 0);

  const DigitSet& digits() const noexcept { return digits_; }
  const Embedder& embedder() const noexcept { return *emb_; }
  const MinPoly& minpoly() const noexcept { return digits_.alpha(); }

  // Id of the digit in beta's coset whose orthant closure holds beta.
  // beta != 0. Throws BoundaryUndecidable, InputError (no such digit).
  std::size_t select_digit(const IntPoly& beta) const;
  // (digit id, (beta - eps) / alpha).
  std::pair<std::size_t, IntPoly> step(const IntPoly& beta) const;
  ExpansionTrace expand(const IntPoly& beta0, long max_steps = kDefaultMaxSteps, bool record_values = true) const;

  std::vector<Interval> abs_values(const IntPoly& beta) const;

 private:
  DigitSet digits_;
  std::shared_ptr<const Embedder> emb_;
};

// sum eps_j alpha^j + alpha^k tail == beta0 in Q(alpha).
bool recomposes(const ExpansionTrace& t, const DigitSet& digits);

ExpansionTrace expand(const IntPoly& beta0, const DigitSet& digits, const AlgebraicNumber& a,
                      long max_steps = kDefaultMaxSteps);

// Canonical seeds: polynomials of degree <= n - 1 with coefficients in
// [lo, hi]. An empty box has no seeds.
struct SeedBox {
  long lo = -kDefaultSeedRadius;
  long hi = kDefaultSeedRadius;
  bool empty() const { return lo > hi; }
  static SeedBox none() { return {1, 0}; }
  static SeedBox symmetric(long k) { return {-k, k}; }
};

std::vector<IntPoly> seeds(const SeedBox& box, int n);

struct Attractor {
  // Cycle states, plus 0 whenever some seed terminates; sorted.
  std::vector<IntPoly> states;
  // Non-zero cycles, each rotated to start at its least state, sorted.
  std::vector<std::vector<IntPoly>> cycles;
  long seed_count = 0;
  long zero_count = 0;
  long cycle_count = 0;
  // Seeds that did not reach a zero or a repeat within max_steps.
  std::vector<IntPoly> budget_failures;
  // Largest number of steps any seed needed.
  long max_steps_used = 0;
};

// workers == 0 means thread_budget(); the result does not depend on it.
Attractor attractor(const Expander& ex, const SeedBox& box, long max_steps = kDefaultMaxSteps, unsigned workers = 0);

// Word (eps_0, ..., eps_{k-1}, tail) over F u A with beta0 = sum eps_j alpha^j
// + tail alpha^k. The tail is omitted when it is zero.
struct Representation {
  ExpansionStatus status = ExpansionStatus::Budget;  // Budget: tail not in A, or out of steps
  std::vector<IntPoly> word;
  std::vector<std::size_t> digit_ids;
  IntPoly tail;
  bool verified = false;
};

Representation represent(const IntPoly& beta0, const Expander& ex, const Attractor& A,
                         long max_steps = kDefaultMaxSteps);

FieldElem evaluate_word(const std::vector<IntPoly>& word, const MinPoly& m);

// HEURISTIC. Smallest m <= bound_m such that every region element is a word
// of length <= L over {-m, ..., m}; nullopt when none is found, which proves
// nothing. An empty region gives 0.
std::optional<long> search_integer_digits(const AlgebraicNumber& a, long bound_m, const std::vector<IntPoly>& region,
                                          int L);

}  // namespace hrp
