#pragma once

/**
 * @file morphism.hpp
 * @brief Polynomial and linear endomorphisms of E_alpha, the generators phi_gamma, tau, sigma,
 *        the coefficient relations of bracket-preserving linear maps, and normal forms phi_gamma tau^i sigma^j.
 *
 * Conventions
 * -----------
 * A map is stored by the images of x, y, z. For a linear map, row r of the matrix B holds the coefficients
 * of the image of the r-th variable: psi(x) = b11 x + b12 y + b13 z, and so on.
 *
 * Composition compose(a, b) means "apply b first, then a": (a o b)(f) = a(b(f)). For algebra
 * endomorphisms this pushes the images of b through a, so in matrix terms mat(a o b) = mat(b) * mat(a).
 * In this convention sigma o tau = phi_e o tau o sigma holds; in the opposite one the factor would be e^2.
 */

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epa/poisson.hpp"

namespace epa {

// ---------------------------------------------------------------------------------------------------------------
// Endo

template <CoefficientField F>
class Endo {
 public:
  explicit Endo(std::array<Poly<F>, 3> images) : images_(std::move(images)) {}

  static Endo identity(const F& field) { return Endo(generators(field)); }

  const std::array<Poly<F>, 3>& images() const { return images_; }
  const Poly<F>& image(Var v) const { return images_[static_cast<int>(v)]; }
  const F& field() const { return images_[0].field(); }

  Poly<F> apply(const Poly<F>& f) const { return f.substitute(images_); }

  friend bool operator==(const Endo& a, const Endo& b) { return a.images_ == b.images_; }

  std::string to_string(const VarNames& names = kXYZ) const {
    std::string s;
    for (int k = 0; k < 3; ++k) {
      if (k) s += ", ";
      s += std::string(1, names[k]) + " -> " + images_[k].to_string(names);
    }
    return s;
  }

 private:
  std::array<Poly<F>, 3> images_;
};

template <CoefficientField F>
Poly<F> endo_apply(const Endo<F>& phi, const Poly<F>& f) {
  return phi.apply(f);
}

/// outer o inner: inner is applied first.
template <CoefficientField F>
Endo<F> endo_compose(const Endo<F>& outer, const Endo<F>& inner) {
  const auto& im = inner.images();
  return Endo<F>({outer.apply(im[0]), outer.apply(im[1]), outer.apply(im[2])});
}

// ---------------------------------------------------------------------------------------------------------------
// LinearMap

template <CoefficientField F>
class LinearMap {
 public:
  using Scalar = ScalarOf<F>;
  using Entries = std::array<std::array<Scalar, 3>, 3>;

  LinearMap(F field, Entries beta) : field_(std::move(field)), beta_(std::move(beta)) { det_ = compute_det(); }

  static LinearMap identity(const F& field) { return diagonal(field, field.one(), field.one(), field.one()); }
  static LinearMap zero(const F& field) {
    auto z = field.zero();
    return LinearMap(field, {{{z, z, z}, {z, z, z}, {z, z, z}}});
  }
  static LinearMap diagonal(const F& field, const Scalar& a, const Scalar& b, const Scalar& c) {
    auto z = field.zero();
    return LinearMap(field, {{{a, z, z}, {z, b, z}, {z, z, c}}});
  }

  /// Reads off the matrix of an Endo whose images are homogeneous linear (or zero).
  static LinearMap from_endo(const Endo<F>& e) {
    const F& field = e.field();
    Entries b{};
    for (int r = 0; r < 3; ++r) {
      const auto& img = e.images()[r];
      if (!img.is_zero() && !(img.is_homogeneous() && *img.degree() == 1))
        throw PreconditionError("image " + img.to_string() + " is not a linear form");
      for (int c = 0; c < 3; ++c) b[r][c] = img.coefficient(Monomial::of(kVars[c]));
    }
    return LinearMap(field, std::move(b));
  }

  const F& field() const { return field_; }
  const Entries& entries() const { return beta_; }
  /// 1-based with wrap-around, so at(4, 1) == at(1, 1).
  const Scalar& at(int i, int j) const { return beta_[(i - 1) % 3][(j - 1) % 3]; }
  const Scalar& determinant() const { return det_; }
  bool invertible() const { return !det_.is_zero(); }

  Endo<F> to_endo() const {
    auto g = generators(field_);
    std::array<Poly<F>, 3> im{Poly<F>(field_), Poly<F>(field_), Poly<F>(field_)};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) im[r] += g[c].scale(beta_[r][c]);
    return Endo<F>(std::move(im));
  }

  /// Plain matrix product, not map composition (see compose).
  friend LinearMap operator*(const LinearMap& a, const LinearMap& b) {
    Entries m{};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        auto acc = a.field_.zero();
        for (int k = 0; k < 3; ++k) acc += a.beta_[r][k] * b.beta_[k][c];
        m[r][c] = acc;
      }
    return LinearMap(a.field_, std::move(m));
  }

  LinearMap scale(const Scalar& s) const {
    Entries m = beta_;
    for (auto& row : m)
      for (auto& v : row) v = v * s;
    return LinearMap(field_, std::move(m));
  }

  friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.field_ == b.field_ && a.beta_ == b.beta_; }

  /// Row-major, rows separated by "; ", e.g. "1,0,0; 0,e,0; 0,0,-1-e".
  std::string to_string() const {
    std::string s;
    for (int r = 0; r < 3; ++r) {
      if (r) s += "; ";
      for (int c = 0; c < 3; ++c) {
        if (c) s += ',';
        s += beta_[r][c].to_string();
      }
    }
    return s;
  }

 private:
  Scalar compute_det() const {
    const auto& b = beta_;
    return b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
           b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
  }

  F field_;
  Entries beta_;
  Scalar det_;
};

/// Matrix of outer o inner (inner applied first).
template <CoefficientField F>
LinearMap<F> compose(const LinearMap<F>& outer, const LinearMap<F>& inner) {
  return inner * outer;
}

// ---------------------------------------------------------------------------------------------------------------
// Bracket preservation

template <CoefficientField F>
struct MorphismViolation {
  std::string pair;     // "{x,y}", "{y,z}" or "{z,x}"
  Poly<F> difference;   // phi({u,v}) - {phi(u), phi(v)}
};

template <CoefficientField F>
struct MorphismCheck {
  std::optional<MorphismViolation<F>> violation;
  explicit operator bool() const { return !violation.has_value(); }
};

/// Checks phi{u,v} = {phi u, phi v} on the pairs (x,y), (y,z), (z,x). Both sides are biderivations
/// in (u,v) once phi is multiplicative, so the generator pairs decide the question.
template <CoefficientField F>
MorphismCheck<F> is_poisson_morphism(const PoissonStructure<F>& P, const Endo<F>& phi) {
  static constexpr std::array<std::pair<Var, Var>, 3> pairs{{{Var::x, Var::y}, {Var::y, Var::z}, {Var::z, Var::x}}};
  static constexpr std::array<const char*, 3> names{"{x,y}", "{y,z}", "{z,x}"};
  for (int k = 0; k < 3; ++k) {
    auto [u, v] = pairs[k];
    auto lhs = phi.apply(P.bracket(P.gen(u), P.gen(v)));
    auto rhs = P.bracket(phi.image(u), phi.image(v));
    auto diff = lhs - rhs;
    if (!diff.is_zero()) return {MorphismViolation<F>{names[k], std::move(diff)}};
  }
  return {};
}

/// Poisson morphism that is also bijective. Only linear maps are certified here.
template <CoefficientField F>
bool is_linear_automorphism(const PoissonStructure<F>& P, const LinearMap<F>& B) {
  return B.invertible() && static_cast<bool>(is_poisson_morphism(P, B.to_endo()));
}

// ---------------------------------------------------------------------------------------------------------------
// Generators

template <CoefficientField F>
LinearMap<F> phi(const F& field, const ScalarOf<F>& gamma) {
  if (gamma.is_zero()) throw PreconditionError("phi_gamma requires gamma != 0");
  return LinearMap<F>::diagonal(field, gamma, gamma, gamma);
}

/// x -> y, y -> z, z -> x.
template <CoefficientField F>
LinearMap<F> tau(const F& field) {
  auto o = field.one(), z = field.zero();
  return LinearMap<F>(field, {{{z, o, z}, {z, z, o}, {o, z, z}}});
}

/// x -> x, y -> e y, z -> e^2 z. Throws FieldError without a cube root of unity.
template <CoefficientField F>
LinearMap<F> sigma(const F& field) {
  auto e = require_epsilon(field, "sigma");
  return LinearMap<F>::diagonal(field, field.one(), e, e * e);
}

enum class GeneratorKind { phi, tau, sigma };

template <CoefficientField F>
LinearMap<F> generator(GeneratorKind kind, const F& field, const std::optional<ScalarOf<F>>& gamma = std::nullopt) {
  switch (kind) {
    case GeneratorKind::phi:
      if (!gamma) throw PreconditionError("phi requires gamma");
      return phi(field, *gamma);
    case GeneratorKind::tau:
      return tau(field);
    case GeneratorKind::sigma:
      return sigma(field);
  }
  throw PreconditionError("unknown generator");
}

// ---------------------------------------------------------------------------------------------------------------
// Coefficient relations

struct RelationIndex {
  int form;  // 9: the squared-entry relations, 10: the adjacent-product relations
  int i;     // 1-based
  int j;     // 1-based
  bool operator==(const RelationIndex&) const = default;
};

struct RelationReport {
  bool holds = true;
  std::vector<RelationIndex> violated;
  explicit operator bool() const { return holds; }
};

/// The 18 quadratic relations on B equivalent to {a,b} = -alpha ab + c^2 and its cyclic shifts, indices mod 3:
///   b_ij^2      = alpha b_{i+1,j} b_{i+2,j} + (b_{i+1,j+1} b_{i+2,j+2} - b_{i+1,j+2} b_{i+2,j+1})
///   b_ij b_ij+1 = alpha b_{i+1,j+1} b_{i+2,j}
template <CoefficientField F>
RelationReport relations_9_10(const PoissonStructure<F>& P, const LinearMap<F>& B) {
  const auto& al = P.alpha();
  RelationReport rep;
  auto fail = [&](int form, int i, int j) {
    rep.holds = false;
    rep.violated.push_back({form, i, j});
  };
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      auto lhs = B.at(i, j) * B.at(i, j);
      auto rhs = al * B.at(i + 1, j) * B.at(i + 2, j) +
                 (B.at(i + 1, j + 1) * B.at(i + 2, j + 2) - B.at(i + 1, j + 2) * B.at(i + 2, j + 1));
      if (!(lhs == rhs)) fail(9, i, j);
    }
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (!(B.at(i, j) * B.at(i, j + 1) == al * B.at(i + 1, j + 1) * B.at(i + 2, j))) fail(10, i, j);
  return rep;
}

/// Cross-validation oracle: the relations hold exactly when the linear map preserves the bracket.
template <CoefficientField F>
bool relations_equal_bracket_preservation(const PoissonStructure<F>& P, const LinearMap<F>& B) {
  if (!B.invertible()) throw NotInvertible();
  return static_cast<bool>(relations_9_10(P, B)) == static_cast<bool>(is_poisson_morphism(P, B.to_endo()));
}

// ---------------------------------------------------------------------------------------------------------------
// Normal forms

/// phi_gamma o tau^i o sigma^j with 0 <= i, j <= 2.
template <CoefficientField F>
struct AutWord {
  ScalarOf<F> gamma;
  int i = 0;
  int j = 0;

  friend bool operator==(const AutWord&, const AutWord&) = default;

  std::string to_string() const {
    return "(" + gamma.to_string() + ", " + std::to_string(i) + ", " + std::to_string(j) + ")";
  }
};

/// Row r of the matrix has the single entry gamma * e^{j(r-1)} in column r + i (mod 3).
template <CoefficientField F>
LinearMap<F> word_to_matrix(const F& field, const AutWord<F>& w) {
  if (w.gamma.is_zero()) throw PreconditionError("AutWord with gamma = 0");
  LinearMap<F> t_pow = LinearMap<F>::identity(field);
  for (int k = 0; k < w.i; ++k) t_pow = compose(t_pow, tau(field));
  LinearMap<F> s_pow = LinearMap<F>::identity(field);
  for (int k = 0; k < w.j; ++k) s_pow = compose(s_pow, sigma(field));
  return compose(compose(phi(field, w.gamma), t_pow), s_pow);
}

namespace detail {
inline int mod3(int k) { return ((k % 3) + 3) % 3; }
}  // namespace detail

/// sigma^a tau^b = phi_{e^{ab}} tau^b sigma^a and phi is central, so
/// (g1, i1, j1)(g2, i2, j2) = (g1 g2 e^{j1 i2}, i1 + i2, j1 + j2).
template <CoefficientField F>
AutWord<F> word_multiply(const F& field, const AutWord<F>& w1, const AutWord<F>& w2) {
  auto e = require_epsilon(field, "word_multiply");
  auto gamma = w1.gamma * w2.gamma * power(field, e, static_cast<unsigned>(detail::mod3(w1.j * w2.i)));
  return {gamma, detail::mod3(w1.i + w2.i), detail::mod3(w1.j + w2.j)};
}

/// Structural decomposition of B as phi_gamma tau^i sigma^j. Requires alpha^3 != 1.
template <CoefficientField F>
AutWord<F> decompose_normal_form(const PoissonStructure<F>& P, const LinearMap<F>& B) {
  if (P.alpha_cubed_is_one()) throw PreconditionError("decompose_normal_form requires alpha^3 != 1");
  if (!B.invertible()) throw NotInvertible();
  const F& field = B.field();
  const auto& m = B.entries();

  std::array<int, 3> col{};
  for (int r = 0; r < 3; ++r) {
    int nonzero = 0;
    for (int c = 0; c < 3; ++c)
      if (!m[r][c].is_zero()) {
        ++nonzero;
        col[r] = c;
      }
    if (nonzero != 1) throw NotInGroup("row " + std::to_string(r + 1) + " has " + std::to_string(nonzero) + " nonzero entries; not a monomial matrix");
  }
  const int i = detail::mod3(col[0]);
  for (int r = 1; r < 3; ++r)
    if (col[r] != detail::mod3(r + i))
      throw NotInGroup("support is a permutation outside the cyclic group generated by tau");

  const auto gamma = m[0][col[0]];
  const auto s1 = m[1][col[1]] / gamma;
  const auto s2 = m[2][col[2]] / gamma;
  const auto e = field.primitive_cbrt_unity();
  std::optional<int> j;
  auto root = field.one();
  for (int k = 0; k < 3; ++k) {
    if (k > 0) {
      if (!e) break;
      root = root * *e;
    }
    if (s1 == root && s2 == root * root) {
      j = k;
      break;
    }
  }
  if (!j) throw NotInGroup("scale ratios (" + s1.to_string() + ", " + s2.to_string() + ") are not (e^j, e^2j)");

  AutWord<F> w{gamma, i, *j};
  if (!(word_to_matrix(field, w) == B)) throw NotInGroup("reconstruction mismatch");
  return w;
}

}  // namespace epa
