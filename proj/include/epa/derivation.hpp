#pragma once

/**
 * @file derivation.hpp
 * @brief Derivations of E_alpha: action by the product rule, inner derivations ad_f, the bounded-degree space of
 *        Poisson derivations, and probes for local nilpotency.
 *
 * E_alpha has no nonzero locally nilpotent derivation. That cannot be proven by iteration; nilpotency_probe and
 * poisson_derivation_space give bounded evidence only.
 */

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "epa/poisson.hpp"

namespace epa {

template <CoefficientField F>
class Derivation {
 public:
  explicit Derivation(std::array<Poly<F>, 3> images) : images_(std::move(images)) {}

  static Derivation zero(const F& field) { return Derivation({Poly<F>(field), Poly<F>(field), Poly<F>(field)}); }
  /// x d/dx + y d/dy + z d/dz.
  static Derivation euler(const F& field) { return Derivation(generators(field)); }

  const std::array<Poly<F>, 3>& images() const { return images_; }
  const Poly<F>& image(Var v) const { return images_[static_cast<int>(v)]; }
  const F& field() const { return images_[0].field(); }

  bool is_zero() const { return images_[0].is_zero() && images_[1].is_zero() && images_[2].is_zero(); }

  Poly<F> apply(const Poly<F>& f) const {
    Poly<F> r(f.field());
    for (Var v : kVars)
      if (!image(v).is_zero()) r += image(v) * f.derivative(v);
    return r;
  }

  friend bool operator==(const Derivation&, const Derivation&) = default;

  std::string to_string() const {
    return "D(x) = " + images_[0].to_string() + ", D(y) = " + images_[1].to_string() + ", D(z) = " + images_[2].to_string();
  }

 private:
  std::array<Poly<F>, 3> images_;
};

template <CoefficientField F>
Poly<F> derive_apply(const Derivation<F>& D, const Poly<F>& f) {
  return D.apply(f);
}

/// ad_f : g -> {f, g}.
template <CoefficientField F>
Derivation<F> inner_derivation(const PoissonStructure<F>& P, const Poly<F>& f) {
  return Derivation<F>({P.bracket(f, P.gen(Var::x)), P.bracket(f, P.gen(Var::y)), P.bracket(f, P.gen(Var::z))});
}

template <CoefficientField F>
struct DerivationViolation {
  std::string pair;
  Poly<F> difference;  // D({u,v}) - {D u, v} - {u, D v}
};

template <CoefficientField F>
struct DerivationCheck {
  std::optional<DerivationViolation<F>> violation;
  explicit operator bool() const { return !violation.has_value(); }
};

/// D{u,v} = {Du, v} + {u, Dv} on the three generator pairs; both sides are biderivations in (u, v).
template <CoefficientField F>
DerivationCheck<F> is_poisson_derivation(const PoissonStructure<F>& P, const Derivation<F>& D) {
  static constexpr std::array<std::pair<Var, Var>, 3> pairs{{{Var::x, Var::y}, {Var::y, Var::z}, {Var::z, Var::x}}};
  static constexpr std::array<const char*, 3> names{"{x,y}", "{y,z}", "{z,x}"};
  for (int k = 0; k < 3; ++k) {
    auto [u, v] = pairs[k];
    auto gu = P.gen(u), gv = P.gen(v);
    auto diff = D.apply(P.bracket(gu, gv)) - P.bracket(D.image(u), gv) - P.bracket(gu, D.image(v));
    if (!diff.is_zero()) return {DerivationViolation<F>{names[k], std::move(diff)}};
  }
  return {};
}

/// Basis of the Poisson derivations whose three generator images are homogeneous of degree k.
template <CoefficientField F>
std::vector<Derivation<F>> poisson_derivation_space(const PoissonStructure<F>& P, unsigned k) {
  const F& field = P.field();
  const auto basis = monomials_of_degree(k);
  const auto target = monomials_of_degree(k + 1);
  const std::size_t n = basis.size();
  const std::size_t ncols = 3 * n;

  static constexpr std::array<std::pair<Var, Var>, 3> pairs{{{Var::x, Var::y}, {Var::y, Var::z}, {Var::z, Var::x}}};
  std::array<Poly<F>, 3> gen_brackets{P.bracket(P.gen(Var::x), P.gen(Var::y)), P.bracket(P.gen(Var::y), P.gen(Var::z)),
                                      P.bracket(P.gen(Var::z), P.gen(Var::x))};

  linalg::Matrix<F> a(3 * target.size(), linalg::Vector<F>(ncols, field.zero()));
  for (int g = 0; g < 3; ++g)
    for (std::size_t t = 0; t < n; ++t) {
      // Elementary derivation sending generator g to basis[t] and the others to 0.
      auto images = std::array<Poly<F>, 3>{Poly<F>(field), Poly<F>(field), Poly<F>(field)};
      images[g] = Poly<F>::monomial(field, basis[t], field.one());
      Derivation<F> D(images);
      for (int pr = 0; pr < 3; ++pr) {
        auto [u, v] = pairs[pr];
        auto gu = P.gen(u), gv = P.gen(v);
        auto defect = D.apply(gen_brackets[pr]) - P.bracket(D.image(u), gv) - P.bracket(gu, D.image(v));
        for (std::size_t s = 0; s < target.size(); ++s) a[pr * target.size() + s][g * n + t] = defect.coefficient(target[s]);
      }
    }

  std::vector<Derivation<F>> out;
  for (const auto& v : linalg::nullspace(field, std::move(a), ncols)) {
    std::array<Poly<F>, 3> images{Poly<F>(field), Poly<F>(field), Poly<F>(field)};
    for (int g = 0; g < 3; ++g)
      images[g] = from_coefficients(field, basis, std::vector<ScalarOf<F>>(v.begin() + g * n, v.begin() + (g + 1) * n));
    out.emplace_back(std::move(images));
  }
  return out;
}

struct NilpotencyVerdict {
  enum class Kind { vanishes_by, not_nilpotent_witness, inconclusive };

  Kind kind = Kind::inconclusive;
  unsigned steps = 0;            // vanishes_by: iterations needed; witness: iterations performed
  std::optional<Var> witness;    // generator whose iterates do not die
  std::vector<unsigned> degrees; // degrees of D^1(g), ..., D^steps(g) for the witness

  std::string to_string() const {
    switch (kind) {
      case Kind::vanishes_by:
        return "VANISHES_BY(" + std::to_string(steps) + ")";
      case Kind::not_nilpotent_witness: {
        std::string s = "NOT_NILPOTENT_WITNESS(";
        s += "xyz"[static_cast<int>(*witness)];
        s += ", degrees";
        for (auto d : degrees) s += " " + std::to_string(d);
        return s + ")";
      }
      case Kind::inconclusive:
        return "INCONCLUSIVE";
    }
    return "?";
  }
};

/// Iterates D up to m times on x, y and z.
///
/// A witness is reported when D is homogeneous with image degree k and some generator survives m steps:
///  - k = 1: D acts on the 3-dimensional space of linear forms, and a nilpotent operator there satisfies D^3 = 0,
///    so survival past step 3 is a proof;
///  - k >= 2: the iterates strictly increase in degree at every step, reported as evidence.
template <CoefficientField F>
NilpotencyVerdict nilpotency_probe(const PoissonStructure<F>& P, const Derivation<F>& D, unsigned m) {
  if (m < 1) throw PreconditionError("nilpotency_probe requires m >= 1");

  std::optional<unsigned> image_degree;
  bool homogeneous = true;
  for (const auto& img : D.images()) {
    if (img.is_zero()) continue;
    if (!img.is_homogeneous() || (image_degree && *image_degree != *img.degree())) homogeneous = false;
    image_degree = img.degree();
  }

  NilpotencyVerdict verdict;
  unsigned needed = 0;
  std::optional<Var> survivor;
  std::vector<unsigned> survivor_degrees;
  for (Var v : kVars) {
    Poly<F> cur = P.gen(v);
    std::vector<unsigned> degs;
    unsigned step = 0;
    while (step < m && !cur.is_zero()) {
      cur = D.apply(cur);
      ++step;
      if (!cur.is_zero()) degs.push_back(*cur.degree());
    }
    if (cur.is_zero()) {
      needed = std::max(needed, step);
    } else if (!survivor) {
      survivor = v;
      survivor_degrees = std::move(degs);
    }
  }

  if (!survivor) {
    verdict.kind = NilpotencyVerdict::Kind::vanishes_by;
    verdict.steps = needed;
    return verdict;
  }
  verdict.steps = m;
  verdict.witness = survivor;
  verdict.degrees = survivor_degrees;
  const bool degree_preserving = homogeneous && image_degree == 1u && m >= 3;
  const bool degree_raising = homogeneous && image_degree && *image_degree >= 2;
  verdict.kind = (degree_preserving || degree_raising) ? NilpotencyVerdict::Kind::not_nilpotent_witness
                                                       : NilpotencyVerdict::Kind::inconclusive;
  return verdict;
}

/// Decides f in K[C] by solving f = sum_i c_i C^i exactly for i up to deg(f) / 3.
template <CoefficientField F>
bool in_casimir_ring(const PoissonStructure<F>& P, const Poly<F>& f) {
  if (f.is_zero()) return true;
  const F& field = P.field();
  const unsigned top = *f.degree() / 3;
  std::vector<Poly<F>> powers{Poly<F>::constant(field, field.one())};
  for (unsigned i = 1; i <= top; ++i) powers.push_back(powers.back() * P.casimir());

  // Rows indexed by every monomial appearing in f or in some power of C.
  std::vector<Monomial> rows;
  auto collect = [&](const Poly<F>& p) {
    for (const auto& [mono, c] : p.terms())
      if (std::find(rows.begin(), rows.end(), mono) == rows.end()) rows.push_back(mono);
  };
  collect(f);
  for (const auto& p : powers) collect(p);

  linalg::Matrix<F> a(rows.size(), linalg::Vector<F>(powers.size(), field.zero()));
  linalg::Vector<F> b(rows.size(), field.zero());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t i = 0; i < powers.size(); ++i) a[r][i] = powers[i].coefficient(rows[r]);
    b[r] = f.coefficient(rows[r]);
  }
  return linalg::solve(field, std::move(a), b, powers.size()).has_value();
}

/// A Poisson derivation maps the center into itself, so D(C) must lie in K[C].
template <CoefficientField F>
bool casimir_image_check(const PoissonStructure<F>& P, const Derivation<F>& D) {
  if (!is_poisson_derivation(P, D)) throw PreconditionError("casimir_image_check requires a Poisson derivation");
  return in_casimir_ring(P, D.apply(P.casimir()));
}

}  // namespace epa
