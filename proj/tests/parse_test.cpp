#include <gtest/gtest.h>

#include "printers.hpp"
#include "epa/parse.hpp"
#include "epa/sampling.hpp"

namespace epa {
namespace {

const RationalField Q;
const CyclotomicField K;

TEST(ParsePoly, Examples) {
  PoissonStructure<RationalField> P(Q, Rational(2));
  auto [x, y, z] = generators(Q);
  EXPECT_EQ(parse_poly("-2*x*y + z^2", Q), P.bracket(x, y));
  EXPECT_TRUE(parse_poly("0", Q).is_zero());
  EXPECT_EQ(parse_poly("(1/3)*(x^3+y^3+z^3) - 2*x*y*z", Q), P.casimir());
}

TEST(ParsePoly, Precedence) {
  auto [x, y, z] = generators(Q);
  // '^' binds tighter than unary minus.
  EXPECT_EQ(parse_poly("-x^2", Q), -(x * x));
  EXPECT_EQ(parse_poly("(-x)^2", Q), x * x);
  EXPECT_EQ(parse_poly("x - y - z", Q), x - y - z);
  EXPECT_EQ(parse_poly("x*y/2", Q), (x * y).scale(Rational(1, 2)));
  EXPECT_EQ(parse_poly("2*-x", Q), x.scale(Rational(-2)));
  EXPECT_EQ(parse_poly("  x ^ 3 ", Q), x.pow(3));
}

TEST(ParsePoly, Cyclotomic) {
  auto e = Cyclotomic::epsilon();
  auto [x, y, z] = generators(K);
  EXPECT_EQ(parse_poly("e*x + e^2*y", K), x.scale(e) + y.scale(e * e));
  EXPECT_EQ(parse_scalar("e^3", K), Cyclotomic(1));
  EXPECT_EQ(parse_scalar("1+e+e^2", K), Cyclotomic(0));
  EXPECT_EQ(parse_scalar("(1/2+3*e)", K), Cyclotomic(Rational(1, 2), Rational(3)));
}

TEST(ParsePoly, UvwNames) {
  auto [u, v, w] = generators(K);
  EXPECT_EQ(parse_poly("u*v - w", K, kUVW), u * v - w);
  EXPECT_THROW(parse_poly("x", K, kUVW), ParseError);
}

TEST(ParsePoly, Errors) {
  auto position = [](const char* text) -> std::size_t {
    try {
      parse_poly(text, Q);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  EXPECT_THROW(parse_poly("2x", Q), ParseError);
  EXPECT_THROW(parse_poly("x y", Q), ParseError);
  EXPECT_THROW(parse_poly("x^-1", Q), ParseError);
  EXPECT_THROW(parse_poly("e*x", Q), ParseError);
  EXPECT_THROW(parse_poly("(x+y", Q), ParseError);
  EXPECT_THROW(parse_poly("x/y", Q), ParseError);
  EXPECT_THROW(parse_poly("x/0", Q), ParseError);
  EXPECT_THROW(parse_poly("", Q), ParseError);
  EXPECT_THROW(parse_poly("x +", Q), ParseError);
  EXPECT_THROW(parse_poly("x^2y", Q), ParseError);
  EXPECT_THROW(parse_poly("q", Q), ParseError);
  EXPECT_EQ(position("x + $"), 4u);
  EXPECT_EQ(position("x^-1"), 2u);
}

TEST(ParseScalar, ConstantsOnly) {
  EXPECT_EQ(parse_scalar("-1/3", Q), Rational(-1, 3));
  EXPECT_THROW(parse_scalar("x", Q), ParseError);
  PrimeField gf7(7);
  EXPECT_EQ(parse_scalar("e", gf7), gf7.from_int(2));
  EXPECT_EQ(parse_scalar("1/3", gf7), gf7.from_int(5));
}

TEST(ParseMatrix, Examples) {
  EXPECT_EQ(parse_matrix("1,0,0; 0,e,0; 0,0,-1-e", K), sigma(K));
  EXPECT_EQ(parse_matrix("1,0,0;0,1,0;0,0,1", Q), LinearMap<RationalField>::identity(Q));
  EXPECT_EQ(parse_matrix(sigma(K).to_string(), K), sigma(K));
  EXPECT_THROW(parse_matrix("1,0;0,1", Q), ParseError);
  EXPECT_THROW(parse_matrix("1,0,0;0,1,0", Q), ParseError);
  EXPECT_EQ(parse_scalar_list("2,0,1", K), (std::vector<Cyclotomic>{Cyclotomic(2), Cyclotomic(0), Cyclotomic(1)}));
}

TEST(Format, CanonicalFixedPoints) {
  for (const char* s : {"-2*x*y + z^2", "0", "x", "-x + 1/3", "1/3*x^3 - 2*x*y*z + 1/3*y^3 + 1/3*z^3"})
    EXPECT_EQ(format_poly(parse_poly(s, Q)), s);
  for (const char* s : {"(-1-e)*x - e*y + (1+2*e)*z", "e*x^2 + 2*e", "(1/2-e)*x*y*z"}) EXPECT_EQ(format_poly(parse_poly(s, K)), s);
}

TEST(Format, NonCanonicalInputsNormalise) {
  EXPECT_EQ(format_poly(parse_poly("z^2 - 2*x*y", Q)), "-2*x*y + z^2");
  EXPECT_EQ(format_poly(parse_poly("y + x + x", Q)), "2*x + y");
  EXPECT_EQ(format_poly(parse_poly("(x+y)^2", Q)), "x^2 + 2*x*y + y^2");
}

template <CoefficientField F>
void round_trip(const F& field, std::uint64_t seed) {
  sampling::Rng rng(seed);
  for (int t = 0; t < 200; ++t) {
    auto p = sampling::random_poly(field, rng);
    const auto text = format_poly(p);
    const auto back = parse_poly(text, field);
    EXPECT_EQ(back, p) << text;
    EXPECT_EQ(format_poly(back), text);
  }
}

TEST(Format, RandomRoundTrip) {
  round_trip(Q, 71);
  round_trip(K, 72);
  round_trip(PrimeField(7), 73);
}

TEST(Format, RoundTripUvw) {
  sampling::Rng rng(74);
  for (int t = 0; t < 50; ++t) {
    auto p = sampling::random_poly(K, rng);
    EXPECT_EQ(parse_poly(format_poly(p, kUVW), K, kUVW), p);
  }
}

}  // namespace
}  // namespace epa
