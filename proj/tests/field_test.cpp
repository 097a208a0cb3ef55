#include <gtest/gtest.h>

#include "printers.hpp"
#include "epa/field.hpp"
#include "epa/sampling.hpp"

namespace epa {
namespace {

const Cyclotomic e = Cyclotomic::epsilon();

TEST(Cyclotomic, EpsilonSquaredReduces) {
  EXPECT_EQ(e * e, Cyclotomic(Rational(-1), Rational(-1)));
  EXPECT_EQ((e * e).to_string(), "-1-e");
}

TEST(Cyclotomic, EpsilonCubedIsOne) {
  EXPECT_EQ(e * (e * e), Cyclotomic(1));
  EXPECT_TRUE((e * e + e + Cyclotomic(1)).is_zero());
}

TEST(Cyclotomic, NormHasNoEpsilonPart) {
  sampling::Rng rng(11);
  CyclotomicField k;
  for (int t = 0; t < 100; ++t) {
    auto s = sampling::random_scalar(k, rng);
    auto prod = s * s.conjugate();
    EXPECT_TRUE(prod.is_rational());
    EXPECT_EQ(prod.real(), s.norm());
  }
}

TEST(Cyclotomic, Formatting) {
  EXPECT_EQ(e.to_string(), "e");
  EXPECT_EQ((-e).to_string(), "-e");
  EXPECT_EQ(Cyclotomic(Rational(1, 2), Rational(3)).to_string(), "1/2+3*e");
  EXPECT_EQ(Cyclotomic(Rational(0), Rational(-2, 3)).to_string(), "-2/3*e");
}

TEST(PrimeField, CubeOfTwoModSeven) {
  PrimeField gf7(7);
  auto two = gf7.from_int(2);
  // 2^3 = 8 and 8 mod 7 = 1
  EXPECT_EQ(two * two * two, gf7.one());
  EXPECT_EQ((8 % 7), 1);
}

TEST(PrimeField, RejectsBadModuli) {
  EXPECT_THROW(PrimeField(5), FieldError);   // 5 = 2 mod 3
  EXPECT_THROW(PrimeField(9), FieldError);   // composite
  EXPECT_THROW(PrimeField(3), FieldError);
  EXPECT_NO_THROW(PrimeField(13));
}

TEST(PrimeField, MixedModuliThrow) {
  PrimeScalar a(2, 7), b(2, 13);
  EXPECT_THROW(a + b, FieldError);
  EXPECT_THROW((void)(a == b), FieldError);
}

TEST(CubeRoot, PerMode) {
  EXPECT_EQ(*primitive_cbrt_unity(CyclotomicField{}), e);
  EXPECT_FALSE(primitive_cbrt_unity(RationalField{}).has_value());

  // Exhaustive order check mod 7 with plain integers.
  int smallest = 0;
  for (int g = 2; g < 7 && !smallest; ++g)
    if (g * g * g % 7 == 1) smallest = g;
  EXPECT_EQ(smallest, 2);
  EXPECT_EQ(primitive_cbrt_unity(PrimeField(7))->residue(), static_cast<std::uint64_t>(smallest));
}

TEST(Rational, Canonical) {
  Rational r(mpz_class(-6), mpz_class(4));
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  Rational z(mpz_class(0), mpz_class(-5));
  EXPECT_EQ(z.denominator(), 1);
  EXPECT_EQ(z.numerator(), 0);
  EXPECT_EQ(Rational::parse("10/-4").to_string(), "-5/2");
  EXPECT_THROW(Rational::parse("1/0"), DivisionByZero);
  EXPECT_THROW(Rational::parse("abc"), FieldError);
}

TEST(ScalarArith, TableAndErrors) {
  using Q = RationalField;
  EXPECT_EQ(scalar_arith<Q>(ScalarOp::div, Rational(1), Rational(3)).to_string(), "1/3");
  EXPECT_EQ(scalar_arith<Q>(ScalarOp::neg, Rational(2), Rational(0)), Rational(-2));
  EXPECT_THROW(scalar_arith<Q>(ScalarOp::inv, Rational(0), Rational(0)), DivisionByZero);
  EXPECT_THROW(Cyclotomic(0).inv(), DivisionByZero);
  EXPECT_THROW(PrimeScalar(0, 7).inv(), DivisionByZero);
}

template <class F>
void field_axioms(const F& k, std::uint64_t seed) {
  sampling::Rng rng(seed);
  for (int t = 0; t < 200; ++t) {
    auto a = sampling::random_scalar(k, rng), b = sampling::random_scalar(k, rng), c = sampling::random_scalar(k, rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inv(), k.one());
      EXPECT_EQ(b / a * a, b);
    }
  }
}

TEST(FieldAxioms, Rational) { field_axioms(RationalField{}, 1); }
TEST(FieldAxioms, Cyclotomic) { field_axioms(CyclotomicField{}, 2); }
TEST(FieldAxioms, Prime) { field_axioms(PrimeField(13), 3); }

}  // namespace
}  // namespace epa
