#pragma once

// Exact dense linear algebra over a coefficient field: nullspace and linear solve.
// Forward elimination is fraction-free (Bareiss); only back substitution divides.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "epa/field.hpp"

namespace epa::linalg {

template <CoefficientField F>
using Vector = std::vector<ScalarOf<F>>;

template <CoefficientField F>
using Matrix = std::vector<Vector<F>>;

template <CoefficientField F>
struct Echelon {
  Matrix<F> rows;                    // nonzero rows only, in echelon form
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Bareiss elimination to row-echelon form. Every intermediate entry stays a minor of the input,
/// so rational entries do not accumulate denominators from repeated division.
template <CoefficientField F>
Echelon<F> echelon(const F& field, Matrix<F> a, std::size_t ncols) {
  Echelon<F> out;
  auto prev = field.one();
  std::size_t r = 0;
  const std::size_t nrows = a.size();
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t piv = r;
    while (piv < nrows && a[piv][c].is_zero()) ++piv;
    if (piv == nrows) continue;
    std::swap(a[r], a[piv]);
    const auto p = a[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const auto f = a[i][c];
      for (std::size_t j = c; j < ncols; ++j) {
        a[i][j] = (p * a[i][j] - f * a[r][j]) / prev;
      }
    }
    prev = p;
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

template <CoefficientField F>
std::size_t rank(const F& field, Matrix<F> a, std::size_t ncols) {
  return echelon(field, std::move(a), ncols).pivots.size();
}

/// Basis of { v : A v = 0 }. One vector per free column, with a 1 in that column.
template <CoefficientField F>
std::vector<Vector<F>> nullspace(const F& field, Matrix<F> a, std::size_t ncols) {
  auto e = echelon(field, std::move(a), ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivots) is_pivot[c] = true;

  std::vector<Vector<F>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vector<F> v(ncols, field.zero());
    v[free] = field.one();
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
      const auto& row = e.rows[k];
      auto acc = field.zero();
      for (std::size_t j = e.pivots[k] + 1; j < ncols; ++j)
        if (!row[j].is_zero() && !v[j].is_zero()) acc += row[j] * v[j];
      v[e.pivots[k]] = -acc / row[e.pivots[k]];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of A v = b, or nullopt when inconsistent. Free variables are set to zero.
template <CoefficientField F>
std::optional<Vector<F>> solve(const F& field, Matrix<F> a, const Vector<F>& b, std::size_t ncols) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  auto e = echelon(field, std::move(a), ncols + 1);
  if (!e.pivots.empty() && e.pivots.back() == ncols) return std::nullopt;
  Vector<F> v(ncols, field.zero());
  for (std::size_t k = e.pivots.size(); k-- > 0;) {
    const auto& row = e.rows[k];
    auto acc = row[ncols];
    for (std::size_t j = e.pivots[k] + 1; j < ncols; ++j)
      if (!row[j].is_zero() && !v[j].is_zero()) acc -= row[j] * v[j];
    v[e.pivots[k]] = acc / row[e.pivots[k]];
  }
  return v;
}

}  // namespace epa::linalg
