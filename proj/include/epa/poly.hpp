#pragma once

/**
 * @file poly.hpp
 * @brief Sparse polynomials in three variables over an exact coefficient field.
 *
 * Terms are kept in a map sorted in descending graded-lex order (x > y > z), with no zero coefficients
 * stored. The variables are x, y, z by default; the same type represents polynomials in u, v, w when a
 * caller works in another coordinate system, only the printed names change.
 */

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epa/field.hpp"

namespace epa {

enum class Var : int { x = 0, y = 1, z = 2 };

inline constexpr std::array<Var, 3> kVars{Var::x, Var::y, Var::z};

struct Monomial {
  std::array<unsigned, 3> exp{0, 0, 0};

  constexpr unsigned degree() const { return exp[0] + exp[1] + exp[2]; }
  constexpr unsigned operator[](Var v) const { return exp[static_cast<int>(v)]; }

  static constexpr Monomial of(Var v, unsigned e = 1) {
    Monomial m;
    m.exp[static_cast<int>(v)] = e;
    return m;
  }

  friend constexpr Monomial operator*(const Monomial& a, const Monomial& b) {
    return {{a.exp[0] + b.exp[0], a.exp[1] + b.exp[1], a.exp[2] + b.exp[2]}};
  }
  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
};

/// Strict "a comes before b": higher total degree first, then larger x exponent, then larger y exponent.
struct GrlexDescending {
  constexpr bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    if (a.exp[0] != b.exp[0]) return a.exp[0] > b.exp[0];
    return a.exp[1] > b.exp[1];
  }
};

/// All monomials of total degree d, in descending graded-lex order. There are (d+1)(d+2)/2 of them.
inline std::vector<Monomial> monomials_of_degree(unsigned d) {
  std::vector<Monomial> out;
  out.reserve((d + 1) * (d + 2) / 2);
  for (unsigned ex = d + 1; ex-- > 0;)
    for (unsigned ey = d - ex + 1; ey-- > 0;) out.push_back({{ex, ey, d - ex - ey}});
  return out;
}

/// Names used when printing or parsing the three variables.
using VarNames = std::array<char, 3>;
inline constexpr VarNames kXYZ{'x', 'y', 'z'};
inline constexpr VarNames kUVW{'u', 'v', 'w'};

/// Total degree; std::nullopt stands for the degree of the zero polynomial (minus infinity).
using Degree = std::optional<unsigned>;

template <CoefficientField F>
class Poly {
 public:
  using Scalar = ScalarOf<F>;
  using TermMap = std::map<Monomial, Scalar, GrlexDescending>;

  Poly() requires std::default_initializable<F> = default;
  explicit Poly(F field) : field_(std::move(field)) {}

  static Poly constant(const F& field, const Scalar& c) { return monomial(field, Monomial{}, c); }
  static Poly constant(const F& field, long long n) { return constant(field, field.from_int(n)); }
  static Poly variable(const F& field, Var v) { return monomial(field, Monomial::of(v), field.one()); }
  static Poly monomial(const F& field, const Monomial& m, const Scalar& c) {
    Poly p(field);
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
  }

  const F& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0); }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  /// Constant term; meaningful for constant polynomials.
  Scalar constant_value() const { return coefficient(Monomial{}); }

  Degree degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree();
  }

  /// Lowest degree present, nullopt for zero.
  Degree low_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
  }

  bool is_homogeneous() const { return !terms_.empty() && *degree() == *low_degree(); }

  /// Homogeneous components in ascending degree; their sum is the polynomial.
  std::vector<std::pair<unsigned, Poly>> homogeneous_components() const {
    std::vector<std::pair<unsigned, Poly>> out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      unsigned d = it->first.degree();
      if (out.empty() || out.back().first != d) out.emplace_back(d, Poly(field_));
      out.back().second.terms_.emplace(it->first, it->second);
    }
    return out;
  }

  Poly homogeneous_part(unsigned d) const {
    Poly p(field_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) p.terms_.emplace(m, c);
    return p;
  }

  /// Component of maximal degree; zero for the zero polynomial.
  Poly top_part() const { return terms_.empty() ? *this : homogeneous_part(*degree()); }

  Poly operator-() const {
    Poly r(field_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
  }

  Poly& operator+=(const Poly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Scalar& s) { return *this = scale(s); }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly r(a.field_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  friend Poly operator*(const Poly& a, const Scalar& s) { return a.scale(s); }
  friend Poly operator*(const Scalar& s, const Poly& a) { return a.scale(s); }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (!(a.field_ == b.field_) || a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
      if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
    return true;
  }

  Poly scale(const Scalar& s) const {
    Poly r(field_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * s);
    return r;
  }

  /// Repeated squaring; negative exponents are rejected.
  Poly pow(long long e) const {
    if (e < 0) throw PreconditionError("negative exponent " + std::to_string(e));
    Poly result = constant(field_, field_.one()), base = *this;
    for (; e; e >>= 1) {
      if (e & 1) result = result * base;
      if (e > 1) base = base * base;
    }
    return result;
  }

  Poly derivative(Var v) const {
    int k = static_cast<int>(v);
    Poly r(field_);
    for (const auto& [m, c] : terms_) {
      if (m.exp[k] == 0) continue;
      Monomial dm = m;
      --dm.exp[k];
      r.add_term(dm, c * field_.from_int(m.exp[k]));
    }
    return r;
  }

  /// Substitute images[k] for the k-th variable.
  Poly substitute(const std::array<Poly, 3>& images) const {
    for (const auto& img : images) check(img);
    std::array<std::vector<Poly>, 3> powers;
    auto power_of = [&](int k, unsigned e) -> const Poly& {
      auto& cache = powers[k];
      if (cache.empty()) cache.push_back(constant(field_, field_.one()));
      while (cache.size() <= e) cache.push_back(cache.back() * images[k]);
      return cache[e];
    };
    Poly r(field_);
    for (const auto& [m, c] : terms_) r += ((power_of(0, m.exp[0]) * power_of(1, m.exp[1])) * power_of(2, m.exp[2])).scale(c);
    return r;
  }

  /// Canonical text, e.g. "-2*x*y + z^2". Terms are printed in descending graded-lex order.
  std::string to_string(const VarNames& names = kXYZ) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      CoefficientText ct = c.coefficient_text();
      if (first) {
        if (ct.negative) out += '-';
      } else {
        out += ct.negative ? " - " : " + ";
      }
      first = false;
      std::string mono = monomial_text(m, names);
      std::string body = ct.compound ? "(" + ct.body + ")" : ct.body;
      if (mono.empty()) {
        out += body;
      } else if (body == "1") {
        out += mono;
      } else {
        out += body + "*" + mono;
      }
    }
    return out;
  }

 private:
  static std::string monomial_text(const Monomial& m, const VarNames& names) {
    std::string s;
    for (int k = 0; k < 3; ++k) {
      if (m.exp[k] == 0) continue;
      if (!s.empty()) s += '*';
      s += names[k];
      if (m.exp[k] > 1) s += "^" + std::to_string(m.exp[k]);
    }
    return s;
  }

  void check(const Poly& o) const {
    if (!(field_ == o.field_))
      throw FieldError("mixed field modes: " + field_.mode().to_string() + " vs " + o.field_.mode().to_string());
  }

  void add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  F field_;
  TermMap terms_;
};

template <CoefficientField F>
Poly<F> partial_derivative(const Poly<F>& f, Var v) {
  return f.derivative(v);
}

/// det of the Jacobi matrix of (f, g, h) with respect to (x, y, z).
template <CoefficientField F>
Poly<F> jacobian(const Poly<F>& f, const Poly<F>& g, const Poly<F>& h) {
  std::array<std::array<Poly<F>, 3>, 3> d{{
      {f.derivative(Var::x), f.derivative(Var::y), f.derivative(Var::z)},
      {g.derivative(Var::x), g.derivative(Var::y), g.derivative(Var::z)},
      {h.derivative(Var::x), h.derivative(Var::y), h.derivative(Var::z)},
  }};
  return d[0][0] * (d[1][1] * d[2][2] - d[1][2] * d[2][1]) - d[0][1] * (d[1][0] * d[2][2] - d[1][2] * d[2][0]) +
         d[0][2] * (d[1][0] * d[2][1] - d[1][1] * d[2][0]);
}

template <CoefficientField F>
std::vector<std::pair<unsigned, Poly<F>>> homogeneous_decompose(const Poly<F>& f) {
  return f.homogeneous_components();
}

template <CoefficientField F>
std::array<Poly<F>, 3> generators(const F& field) {
  return {Poly<F>::variable(field, Var::x), Poly<F>::variable(field, Var::y), Poly<F>::variable(field, Var::z)};
}

/// Coefficients of a homogeneous polynomial against monomials_of_degree(d).
template <CoefficientField F>
std::vector<ScalarOf<F>> coefficient_vector(const Poly<F>& f, const std::vector<Monomial>& basis) {
  std::vector<ScalarOf<F>> out;
  out.reserve(basis.size());
  for (const auto& m : basis) out.push_back(f.coefficient(m));
  return out;
}

template <CoefficientField F>
Poly<F> from_coefficients(const F& field, const std::vector<Monomial>& basis, const std::vector<ScalarOf<F>>& coeffs) {
  Poly<F> p(field);
  for (std::size_t k = 0; k < basis.size(); ++k) p += Poly<F>::monomial(field, basis[k], coeffs[k]);
  return p;
}

/// True iff f = lambda * g for some scalar lambda (g nonzero). Zero is a multiple of everything.
template <CoefficientField F>
bool is_scalar_multiple(const Poly<F>& f, const Poly<F>& g) {
  if (f.is_zero()) return true;
  if (g.is_zero() || f.size() != g.size()) return false;
  auto lambda = f.terms().begin()->second / g.terms().begin()->second;
  return f == g.scale(lambda);
}

}  // namespace epa
