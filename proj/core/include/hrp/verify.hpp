#pragma once

// Oracles that do not go through the division map: word enumeration,
// region coverage, number-system tests, and the audit of expansion traces.

#include <cstddef>
#include <string>
#include <vector>

#include "hrp/digitset.hpp"
#include "hrp/expander.hpp"
#include "hrp/places.hpp"
#include "hrp/ring.hpp"

namespace hrp {

inline constexpr std::size_t kWordGuard = 10'000'000;

// Values of all words of length <= L over F, sorted. Throws GuardExceeded
// when more than `guard` values are generated.
std::vector<FieldElem> enumerate_words(const std::vector<IntPoly>& F, const MinPoly& m, int L,
                                       std::size_t guard = kWordGuard);

// Canonical elements of degree <= n - 1 with every coefficient in [lo, hi].
std::vector<IntPoly> coefficient_box(int n, long lo, long hi);

struct CoverageReport {
  std::size_t alphabet_size = 0;
  int max_length = 0;
  // Shortest word length at which the last region element appeared; -1 when
  // something is missing.
  int length_used = -1;
  std::string region;
  std::size_t region_size = 0;
  bool covered = false;
  std::vector<FieldElem> misses;
};

// Breadth-first W_l = F + alpha W_(l-1). For expanding alpha, partial words
// that provably cannot lead back into the region are dropped.
CoverageReport coverage(const std::vector<IntPoly>& F, const AlgebraicNumber& a, const std::vector<IntPoly>& region,
                        int L, std::size_t guard = kWordGuard, const std::string& description = "");

struct NumberSystemReport {
  bool card_ok = false;    // 0 in F and Card(F) = |M(0)|
  bool canonical = false;  // F = {0, ..., |M(0)| - 1}
  bool covered = false;    // region covered with words of length <= L
  bool is_candidate = false;
};

NumberSystemReport number_system_check(const std::vector<IntPoly>& F, const AlgebraicNumber& a,
                                       const std::vector<IntPoly>& region, int L, std::size_t guard = kWordGuard);

struct AuditEntry {
  long step = 0;
  std::size_t place = 0;
  Interval before, after;
  Rational bound;  // max(before, c)
  bool pass = false;
};

struct AuditReport {
  std::vector<AuditEntry> entries;
  long decrease_violations = 0;
  long sign_violations = 0;   // beta eps < 0 at a real place
  long angle_violations = 0;  // angle(beta, eps) > pi/2 - eta at a complex place
  long digit_violations = 0;  // digit not in beta's coset, or wrong next state
  bool recomposition = false;
  bool passed() const {
    return recomposition && decrease_violations == 0 && sign_violations == 0 && angle_violations == 0 &&
           digit_violations == 0;
  }
};

inline const Rational kDefaultTolerance{1, 1000000000};

// Re-derives every step of the trace from the digit set: the next state,
// |next|_p < max(|beta|_p, c) + tol, the real-place sign contract and the
// complex-place angular gap. Uses its own place values, not the trace's.
AuditReport audit_trace(const ExpansionTrace& t, const DigitSet& F, const Embedder& emb,
                        const Rational& tolerance = kDefaultTolerance);

}  // namespace hrp
