#pragma once

/**
 * @file classify.hpp
 * @brief Brute-force oracles over finite fields and small integer boxes.
 *
 * enumerate_fq walks all 3x3 matrices over GF(p) and keeps the invertible ones satisfying the 18 coefficient
 * relations; the result is compared with the closure of phi_gamma, tau, sigma computed independently by
 * breadth-first search over matrix products. Characteristic p is outside the range where the classification is
 * known, so a count mismatch is a finding, not an error.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <set>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "epa/morphism.hpp"

namespace epa {

// ---------------------------------------------------------------------------------------------------------------
// GF(p) enumeration

struct FqReport {
  std::uint64_t p = 0;
  std::uint64_t alpha = 0;
  std::uint64_t enumerated_count = 0;
  std::uint64_t closure_count = 0;
  bool closure_subset = false;  // every generated element was enumerated
  bool match = false;           // enumerated_count == closure_count
  std::vector<LinearMap<PrimeField>> samples;
  std::vector<LinearMap<PrimeField>> solutions;  // all enumerated matrices, row-major radix order
};

namespace detail {

using Cells = std::array<std::uint32_t, 9>;

/// Row-major radix-p code; numeric order equals enumeration order.
inline std::uint64_t encode(const Cells& b, std::uint64_t p) {
  std::uint64_t code = 0;
  for (auto v : b) code = code * p + v;
  return code;
}

inline LinearMap<PrimeField> to_map(const PrimeField& field, const Cells& b) {
  LinearMap<PrimeField>::Entries e{};
  for (int k = 0; k < 9; ++k) e[k / 3][k % 3] = PrimeScalar(b[k], field.modulus());
  return LinearMap<PrimeField>(field, e);
}

inline Cells to_cells(const LinearMap<PrimeField>& m) {
  Cells b{};
  for (int k = 0; k < 9; ++k) b[k] = static_cast<std::uint32_t>(m.entries()[k / 3][k % 3].residue());
  return b;
}

/// One of the 18 relations with its cells precomputed; `last` is the largest cell index it reads.
struct FastRelation {
  int form;
  std::array<int, 7> cell{};  // form 9: ij, i+1 j, i+2 j, i+1 j+1, i+2 j+2, i+1 j+2, i+2 j+1; form 10: first four
  int last = 0;
};

inline std::vector<FastRelation> fast_relations() {
  auto idx = [](int i, int j) { return (i % 3) * 3 + (j % 3); };
  std::vector<FastRelation> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      FastRelation r{9, {idx(i, j), idx(i + 1, j), idx(i + 2, j), idx(i + 1, j + 1), idx(i + 2, j + 2), idx(i + 1, j + 2),
                         idx(i + 2, j + 1)}};
      r.last = *std::max_element(r.cell.begin(), r.cell.end());
      out.push_back(r);
    }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      FastRelation r{10, {idx(i, j), idx(i, j + 1), idx(i + 1, j + 1), idx(i + 2, j), 0, 0, 0}};
      r.last = *std::max_element(r.cell.begin(), r.cell.begin() + 4);
      out.push_back(r);
    }
  return out;
}

inline bool fast_holds(const FastRelation& r, const Cells& b, std::uint64_t alpha, std::uint64_t p) {
  auto at = [&](int k) -> std::uint64_t { return b[r.cell[k]]; };
  if (r.form == 9) {
    std::uint64_t lhs = at(0) * at(0) % p;
    std::uint64_t rhs = (alpha * (at(1) * at(2) % p) + at(3) * at(4) % p + p - at(5) * at(6) % p) % p;
    return lhs == rhs;
  }
  return at(0) * at(1) % p == alpha * (at(2) * at(3) % p) % p;
}

inline std::uint64_t fast_det(const Cells& b, std::uint64_t p) {
  auto m = [&](int r, int c) -> std::uint64_t { return b[r * 3 + c]; };
  auto minor = [&](int r1, int r2, int c1, int c2) { return (m(r1, c1) * m(r2, c2) % p + p * p - m(r1, c2) * m(r2, c1) % p) % p; };
  return (m(0, 0) * minor(1, 2, 1, 2) % p + p - m(0, 1) * minor(1, 2, 0, 2) % p + m(0, 2) * minor(1, 2, 0, 1) % p) % p;
}

/// Depth-first search over cells, row-major, aborting as soon as a relation whose cells are all fixed fails.
class FqSearch {
 public:
  FqSearch(std::uint64_t p, std::uint64_t alpha) : p_(p), alpha_(alpha) {
    by_last_.resize(9);
    for (const auto& r : fast_relations()) by_last_[r.last].push_back(r);
  }

  /// Solutions whose first row is (r0, r1, r2).
  std::vector<Cells> run_prefix(std::uint32_t r0, std::uint32_t r1, std::uint32_t r2) const {
    std::vector<Cells> out;
    if (r0 == 0 && r1 == 0 && r2 == 0) return out;  // zero row: singular
    Cells b{};
    b[0] = r0;
    b[1] = r1;
    b[2] = r2;
    for (int k = 0; k < 3; ++k)
      if (!check(k, b)) return out;
    descend(3, b, out);
    return out;
  }

 private:
  bool check(int k, const Cells& b) const {
    for (const auto& r : by_last_[k])
      if (!fast_holds(r, b, alpha_, p_)) return false;
    return true;
  }

  bool rows_independent(const Cells& b) const {
    for (auto [c1, c2] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
      if ((std::uint64_t{b[c1]} * b[3 + c2] + p_ * p_ - std::uint64_t{b[c2]} * b[3 + c1]) % p_ != 0) return true;
    return false;
  }

  void descend(int k, Cells& b, std::vector<Cells>& out) const {
    if (k == 9) {
      if (fast_det(b, p_) != 0) out.push_back(b);
      return;
    }
    if (k == 6 && !rows_independent(b)) return;
    for (std::uint32_t v = 0; v < p_; ++v) {
      b[k] = v;
      if (check(k, b)) descend(k + 1, b, out);
    }
    b[k] = 0;
  }

  std::uint64_t p_;
  std::uint64_t alpha_;
  std::vector<std::vector<FastRelation>> by_last_;
};

inline std::uint64_t primitive_root(std::uint64_t p) {
  for (std::uint64_t g = 2; g < p; ++g) {
    PrimeScalar s(g, p);
    std::uint64_t order = 1;
    auto cur = s;
    while (!cur.is_one()) {
      cur = cur * s;
      ++order;
    }
    if (order == p - 1) return g;
  }
  return 1;  // p = 2
}

}  // namespace detail

/// Breadth-first closure of { phi_g (g a primitive root), tau, sigma } under composition.
inline std::vector<LinearMap<PrimeField>> generated_closure(const PrimeField& field) {
  const std::uint64_t p = field.modulus();
  const std::array<LinearMap<PrimeField>, 3> gens{phi(field, PrimeScalar(detail::primitive_root(p), p)), tau(field), sigma(field)};
  std::set<std::uint64_t> seen;
  std::vector<LinearMap<PrimeField>> out;
  std::deque<LinearMap<PrimeField>> queue{LinearMap<PrimeField>::identity(field)};
  seen.insert(detail::encode(detail::to_cells(queue.front()), p));
  while (!queue.empty()) {
    auto g = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      auto h = compose(s, g);
      if (seen.insert(detail::encode(detail::to_cells(h), p)).second) queue.push_back(h);
    }
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [p](const auto& a, const auto& b) {
    return detail::encode(detail::to_cells(a), p) < detail::encode(detail::to_cells(b), p);
  });
  return out;
}

/// Exhaustive count of invertible bracket-preserving linear maps over GF(p) for the given alpha.
/// The first-row prefixes are split across `threads` workers; output does not depend on the worker count.
inline FqReport enumerate_fq(const PrimeField& field, const PrimeScalar& alpha, unsigned threads = 1,
                             std::size_t sample_limit = 12) {
  const std::uint64_t p = field.modulus();
  if (alpha.modulus() != p) throw FieldError("alpha is not an element of GF(" + std::to_string(p) + ")");
  if ((alpha * alpha * alpha).is_one()) throw PreconditionError("enumerate_fq requires alpha^3 != 1");
  if (p >= (1u << 16)) throw PreconditionError("enumerate_fq is limited to p < 65536");

  detail::FqSearch search(p, alpha.residue());
  const std::uint64_t prefixes = p * p * p;
  std::vector<std::vector<detail::Cells>> parts(prefixes);
  auto work = [&](std::uint64_t begin, std::uint64_t step) {
    for (std::uint64_t k = begin; k < prefixes; k += step)
      parts[k] = search.run_prefix(static_cast<std::uint32_t>(k / (p * p)), static_cast<std::uint32_t>(k / p % p),
                                   static_cast<std::uint32_t>(k % p));
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }

  FqReport rep;
  rep.p = p;
  rep.alpha = alpha.residue();
  std::vector<std::uint64_t> codes;
  for (const auto& part : parts)
    for (const auto& b : part) {
      codes.push_back(detail::encode(b, p));
      rep.solutions.push_back(detail::to_map(field, b));
    }
  rep.enumerated_count = codes.size();
  for (std::size_t k = 0; k < rep.solutions.size() && k < sample_limit; ++k) rep.samples.push_back(rep.solutions[k]);

  const auto closure = generated_closure(field);
  rep.closure_count = closure.size();
  rep.closure_subset = std::all_of(closure.begin(), closure.end(), [&](const auto& m) {
    return std::binary_search(codes.begin(), codes.end(), detail::encode(detail::to_cells(m), p));
  });
  rep.match = rep.enumerated_count == rep.closure_count;
  return rep;
}

inline nlohmann::json to_json(const FqReport& r) {
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& m : r.samples) samples.push_back(m.to_string());
  return {{"p", r.p},
          {"alpha", r.alpha},
          {"enumerated_count", r.enumerated_count},
          {"closure_count", r.closure_count},
          {"closure_subset", r.closure_subset},
          {"match", r.match},
          {"samples", samples}};
}

// ---------------------------------------------------------------------------------------------------------------
// Proportionality of solutions of the Hesse cubic in linear forms

template <CoefficientField F>
struct LinearSolutionSearch {
  std::size_t vanishing_triples = 0;                 // nonzero triples with a^3+b^3+c^3-3 alpha abc = 0
  std::vector<std::array<Poly<F>, 3>> counterexamples;  // vanishing triples that are not pairwise proportional
};

/// Enumerates triples of linear forms a, b, c in x and y with integer coefficients in [-bound, bound].
template <CoefficientField F>
LinearSolutionSearch<F> lemma4_search(const PoissonStructure<F>& P, int bound) {
  if (P.alpha_cubed_is_one()) throw PreconditionError("lemma4_search requires alpha^3 != 1");
  const F& field = P.field();
  const auto x = Poly<F>::variable(field, Var::x), y = Poly<F>::variable(field, Var::y);
  const auto three_alpha = field.from_int(3) * P.alpha();

  struct Form {
    int s, t;
    Poly<F> poly, cube;
  };
  std::vector<Form> forms;
  for (int s = -bound; s <= bound; ++s)
    for (int t = -bound; t <= bound; ++t) {
      auto f = x.scale(field.from_int(s)) + y.scale(field.from_int(t));
      forms.push_back({s, t, f, f.pow(3)});
    }
  auto proportional = [](const Form& a, const Form& b) { return a.s * b.t - a.t * b.s == 0; };

  LinearSolutionSearch<F> out;
  for (const auto& a : forms)
    for (const auto& b : forms) {
      auto ab = a.poly * b.poly;
      auto partial = a.cube + b.cube;
      for (const auto& c : forms) {
        if (a.poly.is_zero() && b.poly.is_zero() && c.poly.is_zero()) continue;
        if (!(partial + c.cube - (ab * c.poly).scale(three_alpha)).is_zero()) continue;
        ++out.vanishing_triples;
        if (!proportional(a, b) || !proportional(b, c) || !proportional(a, c)) out.counterexamples.push_back({a.poly, b.poly, c.poly});
      }
    }
  return out;
}

// ---------------------------------------------------------------------------------------------------------------
// Column products

template <CoefficientField F>
struct ColumnProductReport {
  enum class Status { premise_false, holds, violated };
  Status status = Status::premise_false;
  std::array<ScalarOf<F>, 3> products;  // product of the entries of each column
};

/// If the adjacent-product relations hold and alpha^3 != 1, then b^j b^{j+1} = alpha^3 b^{j+1} b^j forces
/// every product of two cyclically adjacent column products to vanish.
template <CoefficientField F>
ColumnProductReport<F> cyclic_column_product_check(const PoissonStructure<F>& P, const LinearMap<F>& B) {
  ColumnProductReport<F> rep;
  for (int j = 1; j <= 3; ++j) rep.products[j - 1] = B.at(1, j) * B.at(2, j) * B.at(3, j);
  const auto rel = relations_9_10(P, B);
  const bool premise = !P.alpha_cubed_is_one() &&
                       std::none_of(rel.violated.begin(), rel.violated.end(), [](const auto& r) { return r.form == 10; });
  if (!premise) return rep;
  bool ok = true;
  for (int j = 0; j < 3; ++j) ok = ok && (rep.products[j] * rep.products[(j + 1) % 3]).is_zero();
  rep.status = ok ? ColumnProductReport<F>::Status::holds : ColumnProductReport<F>::Status::violated;
  return rep;
}

}  // namespace epa
