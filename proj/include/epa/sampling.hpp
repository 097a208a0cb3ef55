#pragma once

// Seeded random generators for scalars, polynomials and matrices, shared by the tests, acceptance suite and CLI.

#include <random>

#include "epa/morphism.hpp"

namespace epa::sampling {

using Rng = std::mt19937_64;

inline long long uniform_int(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

/// Small rational: numerator in [-bound, bound], denominator in [1, 3].
inline Rational random_scalar(const RationalField&, Rng& rng, long long bound = 3) {
  return Rational(mpz_class(static_cast<long>(uniform_int(rng, -bound, bound))), mpz_class(static_cast<long>(uniform_int(rng, 1, 3))));
}

inline Cyclotomic random_scalar(const CyclotomicField&, Rng& rng, long long bound = 3) {
  RationalField q;
  // One time in three the scalar is rational, so terms with simple coefficients are exercised too.
  if (uniform_int(rng, 0, 2) == 0) return Cyclotomic(random_scalar(q, rng, bound));
  auto a = random_scalar(q, rng, bound);
  auto b = random_scalar(q, rng, bound);
  return Cyclotomic(std::move(a), std::move(b));
}

inline PrimeScalar random_scalar(const PrimeField& f, Rng& rng, long long = 0) {
  return f.from_int(uniform_int(rng, 0, static_cast<long long>(f.modulus()) - 1));
}

template <CoefficientField F>
ScalarOf<F> random_nonzero_scalar(const F& f, Rng& rng, long long bound = 3) {
  for (;;) {
    auto s = random_scalar(f, rng, bound);
    if (!s.is_zero()) return s;
  }
}

/// Up to max_terms random terms of total degree <= max_degree.
template <CoefficientField F>
Poly<F> random_poly(const F& f, Rng& rng, unsigned max_degree = 4, unsigned max_terms = 6, long long bound = 3) {
  Poly<F> p(f);
  const auto terms = static_cast<unsigned>(uniform_int(rng, 1, max_terms));
  for (unsigned t = 0; t < terms; ++t) {
    const auto d = static_cast<unsigned>(uniform_int(rng, 0, max_degree));
    const auto ex = static_cast<unsigned>(uniform_int(rng, 0, d));
    const auto ey = static_cast<unsigned>(uniform_int(rng, 0, d - ex));
    p += Poly<F>::monomial(f, Monomial{{ex, ey, d - ex - ey}}, random_scalar(f, rng, bound));
  }
  return p;
}

template <CoefficientField F>
LinearMap<F> random_matrix(const F& f, Rng& rng, long long bound = 3) {
  typename LinearMap<F>::Entries b{};
  for (auto& row : b)
    for (auto& v : row) v = random_scalar(f, rng, bound);
  return LinearMap<F>(f, std::move(b));
}

template <CoefficientField F>
LinearMap<F> random_invertible_matrix(const F& f, Rng& rng, long long bound = 3) {
  for (;;) {
    auto m = random_matrix(f, rng, bound);
    if (m.invertible()) return m;
  }
}

/// Monomial matrices have one nonzero per row and column.
template <CoefficientField F>
bool is_monomial_shape(const LinearMap<F>& m) {
  std::array<int, 3> per_col{0, 0, 0};
  for (const auto& row : m.entries()) {
    int n = 0;
    for (int c = 0; c < 3; ++c)
      if (!row[c].is_zero()) {
        ++n;
        ++per_col[c];
      }
    if (n != 1) return false;
  }
  return per_col[0] == 1 && per_col[1] == 1 && per_col[2] == 1;
}

/// Invertible, with at least two nonzero entries in some row (hence not monomial).
template <CoefficientField F>
LinearMap<F> random_non_monomial_invertible(const F& f, Rng& rng, long long bound = 3) {
  for (;;) {
    auto m = random_invertible_matrix(f, rng, bound);
    if (!is_monomial_shape(m)) return m;
  }
}

}  // namespace epa::sampling
