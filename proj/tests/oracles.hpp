#pragma once

// Test-only oracles, kept independent of the library's bracket and elimination code paths.

#include <gmpxx.h>

#include <vector>

#include "epa/poly.hpp"

namespace epa::oracle {

/// {f,g} = sum_{i,j} df/dx_i dg/dx_j {x_i,x_j} with the generator table
///   {x,y} = z^2 - alpha xy,  {y,z} = x^2 - alpha yz,  {z,x} = y^2 - alpha zx.
template <CoefficientField F>
Poly<F> table_bracket(const ScalarOf<F>& alpha, const Poly<F>& f, const Poly<F>& g) {
  const F& field = f.field();
  const auto x = Poly<F>::variable(field, Var::x), y = Poly<F>::variable(field, Var::y), z = Poly<F>::variable(field, Var::z);
  const auto xy = z * z - (x * y).scale(alpha);
  const auto yz = x * x - (y * z).scale(alpha);
  const auto zx = y * y - (z * x).scale(alpha);
  const Poly<F> zero(field);
  const std::array<std::array<Poly<F>, 3>, 3> table{{{zero, xy, -zx}, {-xy, zero, yz}, {zx, -yz, zero}}};
  Poly<F> out(field);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) out += f.derivative(kVars[i]) * g.derivative(kVars[j]) * table[i][j];
  return out;
}

/// Rank over Q by textbook Gauss-Jordan with pivot normalisation.
inline std::size_t rank_q(std::vector<std::vector<mpq_class>> a) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    mpq_class inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

/// Dimension of the degree-d Casimir space over Q, built from table_bracket and rank_q.
inline std::size_t casimir_dimension_q(const Rational& alpha, unsigned d) {
  RationalField q;
  const auto basis = monomials_of_degree(d);
  const auto target = monomials_of_degree(d + 1);
  std::vector<std::vector<mpq_class>> a(3 * target.size(), std::vector<mpq_class>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto m = Poly<RationalField>::monomial(q, basis[k], q.one());
    for (int g = 0; g < 3; ++g) {
      auto b = table_bracket<RationalField>(alpha, m, Poly<RationalField>::variable(q, kVars[g]));
      for (std::size_t t = 0; t < target.size(); ++t) a[g * target.size() + t][k] = b.coefficient(target[t]).value();
    }
  }
  return basis.size() - rank_q(std::move(a));
}

}  // namespace epa::oracle
