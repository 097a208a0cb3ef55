#include <gtest/gtest.h>

#include "printers.hpp"
#include "epa/morphism.hpp"
#include "epa/sampling.hpp"

namespace epa {
namespace {

using KMap = LinearMap<CyclotomicField>;
using KWord = AutWord<CyclotomicField>;

const CyclotomicField K;
const RationalField Q;
const Cyclotomic e = Cyclotomic::epsilon();
const Cyclotomic e2 = e * e;

PoissonStructure<CyclotomicField> structure(long long a) { return {K, Cyclotomic(a)}; }

std::vector<KWord> sampled_words() {
  std::vector<KWord> out;
  for (const auto& g : {Cyclotomic(1), Cyclotomic(2), Cyclotomic(Rational(-1, 3)), e})
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out.push_back({g, i, j});
  return out;
}

TEST(EndoApply, Examples) {
  auto [x, y, z] = generators(K);
  EXPECT_EQ(endo_apply(tau(K).to_endo(), x), y);
  auto f = x * x * y - z;
  EXPECT_EQ(endo_apply(Endo<CyclotomicField>::identity(K), f), f);
  // sigma(xy) = e xy and sigma(z^2) = e^4 z^2 = e z^2.
  auto b = z * z - (x * y).scale(Cyclotomic(2));
  EXPECT_EQ(endo_apply(sigma(K).to_endo(), b), b.scale(e));
}

TEST(EndoCompose, GeneratorOrders) {
  auto t = tau(K).to_endo(), s = sigma(K).to_endo();
  auto id = Endo<CyclotomicField>::identity(K);
  EXPECT_EQ(endo_compose(t, endo_compose(t, t)), id);
  EXPECT_EQ(endo_compose(s, endo_compose(s, s)), id);
}

TEST(EndoCompose, SigmaAfterTau) {
  auto [x, y, z] = generators(K);
  auto st = endo_compose(sigma(K).to_endo(), tau(K).to_endo());
  EXPECT_EQ(st, Endo<CyclotomicField>({y.scale(e), z.scale(e2), x}));
  // Same map as phi_e tau sigma.
  auto rhs = endo_compose(phi(K, e).to_endo(), endo_compose(tau(K).to_endo(), sigma(K).to_endo()));
  EXPECT_EQ(st, rhs);
}

TEST(LinearMap, ComposeMatchesEndoCompose) {
  sampling::Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    auto a = sampling::random_matrix(K, rng), b = sampling::random_matrix(K, rng);
    EXPECT_EQ(compose(a, b).to_endo(), endo_compose(a.to_endo(), b.to_endo()));
    EXPECT_EQ(KMap::from_endo(a.to_endo()), a);
  }
}

TEST(IsPoissonMorphism, Examples) {
  auto P = structure(2);
  EXPECT_TRUE(is_poisson_morphism(P, tau(K).to_endo()));
  EXPECT_TRUE(is_poisson_morphism(P, sigma(K).to_endo()));

  auto [x, y, z] = generators(K);
  Endo<CyclotomicField> shift({x + Poly<CyclotomicField>::constant(K, 1), y, z});
  auto check = is_poisson_morphism(P, shift);
  ASSERT_FALSE(check);
  // {x,y} maps to z^2 - 2(x+1)y but {x+1,y} = {x,y}: the difference is -2y.
  EXPECT_EQ(check.violation->pair, "{x,y}");
  EXPECT_EQ(check.violation->difference, y.scale(Cyclotomic(-2)));
}

TEST(Generators, Matrices) {
  auto g = Cyclotomic(Rational(5, 2));
  EXPECT_EQ(generator(GeneratorKind::phi, K, std::optional(g)), KMap::diagonal(K, g, g, g));
  EXPECT_EQ(generator(GeneratorKind::sigma, K), KMap::diagonal(K, Cyclotomic(1), e, e2));
  EXPECT_THROW(sigma(Q), FieldError);
  EXPECT_THROW(phi(K, Cyclotomic(0)), PreconditionError);
  EXPECT_NO_THROW(tau(Q));
}

TEST(Relations, Identity) {
  for (long long a : {0LL, 2LL, -5LL}) EXPECT_TRUE(relations_9_10(structure(a), KMap::identity(K)));
}

TEST(Relations, Sigma) {
  for (long long a : {0LL, 2LL, 7LL}) EXPECT_TRUE(relations_9_10(structure(a), KMap::diagonal(K, Cyclotomic(1), e, e2)));
}

TEST(Relations, SingleRowFails) {
  auto o = Cyclotomic(1), z = Cyclotomic(0);
  KMap b(K, {{{o, o, z}, {z, z, z}, {z, z, z}}});
  auto rep = relations_9_10(structure(2), b);
  EXPECT_FALSE(rep);
  EXPECT_FALSE(b.invertible());
  // b11 b12 = 1 but alpha b22 b31 = 0.
  EXPECT_NE(std::find(rep.violated.begin(), rep.violated.end(), RelationIndex{10, 1, 1}), rep.violated.end());
}

TEST(Relations, EquivalentToBracketPreservation) {
  auto P = structure(2);
  sampling::Rng rng(32);
  for (int t = 0; t < 100; ++t) EXPECT_TRUE(relations_equal_bracket_preservation(P, sampling::random_invertible_matrix(K, rng)));
  EXPECT_TRUE(relations_9_10(P, tau(K)));
  EXPECT_TRUE(is_poisson_morphism(P, tau(K).to_endo()));
  // phi_2 tau: a, b, c = 2y, 2z, 2x, so {a,b} = 4(x^2 - 2yz) = -2ab + c^2. Both sides accept it.
  auto two_tau = tau(K).scale(Cyclotomic(2));
  EXPECT_TRUE(relations_9_10(P, two_tau));
  EXPECT_TRUE(is_poisson_morphism(P, two_tau.to_endo()));
  EXPECT_THROW(relations_equal_bracket_preservation(P, KMap::zero(K)), NotInvertible);
}

TEST(Relations, EquivalenceOnGroupElementsAndNearMisses) {
  auto P = structure(3);
  for (const auto& w : sampled_words()) {
    auto m = word_to_matrix(K, w);
    EXPECT_TRUE(relations_9_10(P, m));
    EXPECT_TRUE(relations_equal_bracket_preservation(P, m));
    // Perturb one entry: both sides must reject.
    auto entries = m.entries();
    entries[1][2] = entries[1][2] + Cyclotomic(1);
    KMap bent(K, entries);
    if (bent.invertible()) {
      EXPECT_FALSE(relations_9_10(P, bent));
      EXPECT_TRUE(relations_equal_bracket_preservation(P, bent));
    }
  }
}

TEST(Decompose, Examples) {
  auto P = structure(2);
  EXPECT_EQ(decompose_normal_form(P, KMap::identity(K)), (KWord{Cyclotomic(1), 0, 0}));
  EXPECT_EQ(decompose_normal_form(P, tau(K)), (KWord{Cyclotomic(1), 1, 0}));
  auto two = Cyclotomic(2);
  // phi_2 o sigma as a matrix product.
  auto m = compose(phi(K, two), sigma(K));
  EXPECT_EQ(m, KMap::diagonal(K, two, two * e, two * e2));
  EXPECT_EQ(decompose_normal_form(P, m), (KWord{two, 0, 1}));
}

TEST(Decompose, Errors) {
  auto P = structure(2);
  auto o = Cyclotomic(1), z = Cyclotomic(0);
  EXPECT_THROW(decompose_normal_form(P, KMap::zero(K)), NotInvertible);
  EXPECT_THROW(decompose_normal_form(P, KMap(K, {{{o, o, z}, {z, o, z}, {z, z, o}}})), NotInGroup);
  // A transposition is monomial but not a power of the 3-cycle.
  EXPECT_THROW(decompose_normal_form(P, KMap(K, {{{z, o, z}, {o, z, z}, {z, z, o}}})), NotInGroup);
  EXPECT_THROW(decompose_normal_form(P, KMap::diagonal(K, o, Cyclotomic(2), o)), NotInGroup);
  EXPECT_THROW(decompose_normal_form(structure(1), KMap::identity(K)), PreconditionError);
}

TEST(WordMultiply, Examples) {
  KWord id{Cyclotomic(1), 0, 0}, s{Cyclotomic(1), 0, 1}, t{Cyclotomic(1), 1, 0};
  for (const auto& w : sampled_words()) EXPECT_EQ(word_multiply(K, id, w), w);
  EXPECT_EQ(word_multiply(K, s, t), (KWord{e, 1, 1}));
  EXPECT_EQ(word_multiply(K, t, s), (KWord{Cyclotomic(1), 1, 1}));
}

TEST(WordToMatrix, Examples) {
  EXPECT_EQ(word_to_matrix(K, KWord{Cyclotomic(1), 0, 0}), KMap::identity(K));
  auto g = Cyclotomic(Rational(-1, 3));
  EXPECT_EQ(word_to_matrix(K, KWord{g, 0, 0}), KMap::diagonal(K, g, g, g));
  auto ts = KMap::from_endo(endo_compose(tau(K).to_endo(), sigma(K).to_endo()));
  EXPECT_EQ(word_to_matrix(K, KWord{Cyclotomic(1), 1, 1}), ts);
}

TEST(GroupProperties, WordsAreAutomorphismsAndRoundTrip) {
  auto P = structure(2);
  for (const auto& w : sampled_words()) {
    auto m = word_to_matrix(K, w);
    EXPECT_TRUE(is_linear_automorphism(P, m)) << w.to_string();
    EXPECT_TRUE(relations_9_10(P, m));
    EXPECT_EQ(decompose_normal_form(P, m), w);
  }
}

TEST(GroupProperties, MultiplicationMatchesComposition) {
  auto P = structure(2);
  auto words = sampled_words();
  for (const auto& a : words)
    for (const auto& b : words) {
      auto product = word_multiply(K, a, b);
      EXPECT_EQ(product, decompose_normal_form(P, compose(word_to_matrix(K, a), word_to_matrix(K, b))));
    }
}

TEST(GroupProperties, ScalingsAreCentral) {
  for (const auto& w : sampled_words())
    for (const auto& g : {Cyclotomic(2), e}) {
      KWord c{g, 0, 0};
      EXPECT_EQ(word_multiply(K, c, w), word_multiply(K, w, c));
    }
}

TEST(GroupProperties, PresentationRelations) {
  auto s = sigma(K), t = tau(K), id = KMap::identity(K);
  auto g1 = Cyclotomic(2), g2 = Cyclotomic(Rational(1), Rational(-1, 2));
  EXPECT_EQ(compose(phi(K, g1), phi(K, g2)), phi(K, g1 * g2));
  EXPECT_EQ(compose(s, phi(K, g1)), compose(phi(K, g1), s));
  EXPECT_EQ(compose(t, phi(K, g1)), compose(phi(K, g1), t));
  EXPECT_EQ(compose(s, compose(s, s)), id);
  EXPECT_EQ(compose(t, compose(t, t)), id);
  EXPECT_EQ(compose(s, t), compose(phi(K, e), compose(t, s)));
  // In the opposite composition convention the scalar would be e^2.
  EXPECT_NE(compose(s, t), compose(phi(K, e2), compose(t, s)));
}

TEST(GroupProperties, NonMonomialMapsRejected) {
  sampling::Rng rng(33);
  auto P = structure(2);
  for (int t = 0; t < 100; ++t) {
    auto m = sampling::random_non_monomial_invertible(K, rng);
    EXPECT_FALSE(is_poisson_morphism(P, m.to_endo())) << m.to_string();
  }
}

TEST(Decompose, PrimeField) {
  PrimeField gf7(7);
  PoissonStructure<PrimeField> P(gf7, gf7.from_int(3));
  AutWord<PrimeField> w{gf7.from_int(5), 2, 1};
  auto m = word_to_matrix(gf7, w);
  EXPECT_TRUE(is_linear_automorphism(P, m));
  EXPECT_EQ(decompose_normal_form(P, m), w);
}

}  // namespace
}  // namespace epa
