#pragma once

// Integer-lattice membership via Hermite normal form, and the Z-module
// depth of field elements built on it.

#include <optional>
#include <vector>

#include "hrp/intpoly.hpp"
#include "hrp/ring.hpp"

namespace hrp {

using IntVector = std::vector<Integer>;

// Row-style Hermite normal form: rows are in echelon form, pivots positive,
// entries above each pivot reduced into [0, pivot).
struct HermiteBasis {
  std::vector<IntVector> rows;
  std::vector<std::size_t> pivot_cols;
  std::size_t ncols = 0;
};

HermiteBasis hermite_normal_form(std::vector<IntVector> generators, std::size_t ncols);
bool lattice_contains(const HermiteBasis& basis, IntVector v);

// Default search depth beyond n - 1.
inline constexpr int kModuleDepthSlack = 64;

// Smallest k <= k_max with x in Z + Z alpha + ... + Z alpha^k, or nullopt.
std::optional<int> module_depth(const FieldElem& x, const MinPoly& m, int k_max);
inline std::optional<int> module_depth(const FieldElem& x, const MinPoly& m) {
  return module_depth(x, m, m.degree() - 1 + kModuleDepthSlack);
}

// Decides p(alpha) in alpha Z[alpha] by solving alpha q = p over the
// lattice of integer polynomials q of degree <= max(deg p, n-1) + slack.
// Independent of the a_0 | p(0) criterion used by in_alpha_zalpha.
bool in_alpha_zalpha_search(const IntPoly& p, const MinPoly& m, int slack = 0);

}  // namespace hrp
