#pragma once

/**
 * @file poisson.hpp
 * @brief The elliptic Poisson structure on K[x,y,z]: {f, g} = J(f, g, C) with C = (x^3+y^3+z^3)/3 - alpha*x*y*z.
 *
 * On generators this gives {x,y} = z^2 - alpha*x*y, {y,z} = x^2 - alpha*y*z, {z,x} = y^2 - alpha*z*x.
 */

#include <array>
#include <vector>

#include "epa/linalg.hpp"
#include "epa/poly.hpp"

namespace epa {

template <CoefficientField F>
class PoissonStructure {
 public:
  using Scalar = ScalarOf<F>;

  PoissonStructure(F field, Scalar alpha) : field_(std::move(field)), alpha_(std::move(alpha)), casimir_(field_) {
    const auto [x, y, z] = generators(field_);
    const auto third = field_.one() / field_.from_int(3);
    casimir_ = (x.pow(3) + y.pow(3) + z.pow(3)).scale(third) - (x * y * z).scale(alpha_);
    cube_is_one_ = alpha_ * alpha_ * alpha_ == field_.one();
  }

  const F& field() const { return field_; }
  const Scalar& alpha() const { return alpha_; }
  const Poly<F>& casimir() const { return casimir_; }
  bool alpha_cubed_is_one() const { return cube_is_one_; }

  Poly<F> gen(Var v) const { return Poly<F>::variable(field_, v); }

  Poly<F> bracket(const Poly<F>& f, const Poly<F>& g) const { return jacobian(f, g, casimir_); }

 private:
  F field_;
  Scalar alpha_;
  Poly<F> casimir_;
  bool cube_is_one_ = false;
};

/// {f,{g,h}} + {g,{h,f}} + {h,{f,g}}.
template <CoefficientField F>
Poly<F> jacobi_defect(const PoissonStructure<F>& P, const Poly<F>& f, const Poly<F>& g, const Poly<F>& h) {
  return P.bracket(f, P.bracket(g, h)) + P.bracket(g, P.bracket(h, f)) + P.bracket(h, P.bracket(f, g));
}

/// {f, g*h} - {f,g}*h - g*{f,h}.
template <CoefficientField F>
Poly<F> leibniz_defect(const PoissonStructure<F>& P, const Poly<F>& f, const Poly<F>& g, const Poly<F>& h) {
  return P.bracket(f, g * h) - P.bracket(f, g) * h - g * P.bracket(f, h);
}

/// ad_f is a derivation, so it vanishes on K[x,y,z] as soon as it vanishes on x, y and z.
template <CoefficientField F>
bool is_casimir(const PoissonStructure<F>& P, const Poly<F>& f) {
  for (Var v : kVars)
    if (!P.bracket(f, P.gen(v)).is_zero()) return false;
  return true;
}

/// Basis of the homogeneous degree-d Casimir elements, from the exact linear system in the
/// coefficients of f given by {f,x} = {f,y} = {f,z} = 0.
template <CoefficientField F>
std::vector<Poly<F>> casimir_space(const PoissonStructure<F>& P, unsigned d) {
  const F& field = P.field();
  const auto basis = monomials_of_degree(d);
  const auto target = monomials_of_degree(d + 1);

  // Column k holds the coefficients of {m_k, x}, {m_k, y}, {m_k, z} stacked.
  const std::size_t nrows = 3 * target.size();
  linalg::Matrix<F> a(nrows, linalg::Vector<F>(basis.size(), field.zero()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto m = Poly<F>::monomial(field, basis[k], field.one());
    for (int g = 0; g < 3; ++g) {
      auto b = P.bracket(m, P.gen(kVars[g]));
      for (std::size_t t = 0; t < target.size(); ++t) a[g * target.size() + t][k] = b.coefficient(target[t]);
    }
  }

  std::vector<Poly<F>> out;
  for (const auto& v : linalg::nullspace(field, std::move(a), basis.size()))
    out.push_back(from_coefficients(field, basis, v));
  return out;
}

}  // namespace epa
