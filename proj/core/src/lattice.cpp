#include "hrp/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace hrp {

namespace {

void axpy(IntVector& y, const Integer& a, const IntVector& x) {
  for (std::size_t k = 0; k < y.size(); ++k) y[k] += a * x[k];
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& z) { return z == 0; });
}

}  // namespace

HermiteBasis hermite_normal_form(std::vector<IntVector> gens, std::size_t ncols) {
  HermiteBasis out;
  out.ncols = ncols;
  std::erase_if(gens, is_zero);
  std::size_t top = 0;
  for (std::size_t col = 0; col < ncols && top < gens.size(); ++col) {
    // Euclid on column `col` among rows top.. until a single non-zero remains.
    while (true) {
      std::size_t best = gens.size();
      for (std::size_t i = top; i < gens.size(); ++i)
        if (gens[i][col] != 0 && (best == gens.size() || abs(gens[i][col]) < abs(gens[best][col]))) best = i;
      if (best == gens.size()) break;
      std::swap(gens[top], gens[best]);
      bool reduced = false;
      for (std::size_t i = top + 1; i < gens.size(); ++i) {
        if (gens[i][col] == 0) continue;
        const Integer q = floor_div(gens[i][col], gens[top][col]);
        axpy(gens[i], -q, gens[top]);
        if (gens[i][col] != 0) reduced = true;
      }
      if (!reduced) break;
    }
    if (gens[top][col] == 0) continue;
    if (gens[top][col] < 0)
      for (auto& z : gens[top]) z = -z;
    for (std::size_t i = 0; i < top; ++i) {
      const Integer q = floor_div(gens[i][col], gens[top][col]);
      if (q != 0) axpy(gens[i], -q, gens[top]);
    }
    out.pivot_cols.push_back(col);
    ++top;
    std::erase_if(gens, is_zero);
  }
  gens.resize(top);
  out.rows = std::move(gens);
  return out;
}

bool lattice_contains(const HermiteBasis& basis, IntVector v) {
  if (v.size() != basis.ncols) throw std::invalid_argument("lattice_contains: dimension mismatch");
  std::size_t next = 0;
  for (std::size_t col = 0; col < basis.ncols; ++col) {
    if (next < basis.pivot_cols.size() && basis.pivot_cols[next] == col) {
      const auto& row = basis.rows[next];
      if (v[col] % row[col] != 0) return false;
      axpy(v, -(v[col] / row[col]), row);
      ++next;
    } else if (v[col] != 0) {
      return false;
    }
  }
  return true;
}

std::optional<int> module_depth(const FieldElem& x, const MinPoly& m, int k_max) {
  const auto n = static_cast<std::size_t>(m.degree());
  // Below n - 1 the generators are unit vectors.
  for (int k = 0; k < static_cast<int>(n) - 1 && k <= k_max; ++k) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      if (static_cast<int>(j) <= k)
        ok = x[j].get_den() == 1;
      else
        ok = x[j] == 0;
    }
    if (ok) return k;
  }
  std::vector<FieldElem> powers;
  FieldElem p = FieldElem::rational(n, 1);
  for (int k = 0; k <= k_max; ++k) {
    if (k) p = mul_alpha(p, m);
    powers.push_back(p);
    if (k < static_cast<int>(n) - 1) continue;
    Integer den = 1;
    for (const auto& g : powers)
      for (const auto& c : g.coords()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& c : x.coords()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    auto scale = [&](const FieldElem& e) {
      IntVector v(n);
      for (std::size_t j = 0; j < n; ++j) {
        const Rational s = e[j] * Rational(den);
        v[j] = s.get_num();
      }
      return v;
    };
    std::vector<IntVector> gens;
    gens.reserve(powers.size());
    for (const auto& g : powers) gens.push_back(scale(g));
    if (lattice_contains(hermite_normal_form(std::move(gens), n), scale(x))) return k;
  }
  return std::nullopt;
}

bool in_alpha_zalpha_search(const IntPoly& p, const MinPoly& m, int slack) {
  if (p.is_zero()) return true;
  const FieldElem quotient = div_alpha(to_field(p, m), m);
  const int k_max = std::max(p.degree(), m.degree() - 1) + slack;
  return module_depth(quotient, m, k_max).has_value();
}

}  // namespace hrp
