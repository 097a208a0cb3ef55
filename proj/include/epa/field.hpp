#pragma once

/**
 * @file field.hpp
 * @brief Exact coefficient fields: the rationals, Q(e) with e^2 + e + 1 = 0, and GF(p) for p = 1 (mod 3).
 *
 * Scalars are plain values. Each field is described by a small descriptor object (RationalField,
 * CyclotomicField, PrimeField) that knows how to build constants; polynomials carry the descriptor,
 * so the descriptor doubles as the field mode.
 */

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "epa/error.hpp"

namespace epa {

struct FieldMode {
  enum class Kind { Rational, Cyclotomic, Prime };

  Kind kind = Kind::Rational;
  std::uint64_t modulus = 0;  // only meaningful for Kind::Prime

  bool operator==(const FieldMode&) const = default;

  std::string to_string() const {
    switch (kind) {
      case Kind::Rational:
        return "rational";
      case Kind::Cyclotomic:
        return "cyclotomic";
      case Kind::Prime:
        return "prime:" + std::to_string(modulus);
    }
    return "?";
  }
};

/// How a coefficient is printed inside a polynomial: a sign that can be pulled out, the magnitude text,
/// and whether the magnitude is a sum that must be parenthesised.
struct CoefficientText {
  bool negative = false;
  std::string body;
  bool compound = false;
};

// ---------------------------------------------------------------------------------------------------------------
// Rational

/// Arbitrary-precision rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "p" or "p/q" with optional leading sign.
  static Rational parse(std::string_view text) {
    mpq_class q;
    std::string s(text);
    if (s.empty() || q.set_str(s, 10) != 0) throw FieldError("malformed rational literal '" + s + "'");
    if (q.get_den() == 0) throw DivisionByZero();
    return Rational(std::move(q));
  }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& value() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational inv() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1) / v_);
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  std::string to_string() const { return v_.get_str(); }

  CoefficientText coefficient_text() const {
    return {sign() < 0, Rational(mpq_class(abs(v_))).to_string(), false};
  }

 private:
  mpq_class v_;
};

// ---------------------------------------------------------------------------------------------------------------
// Cyclotomic

/// a + b*e over Q, e a primitive cube root of unity. e^2 is always rewritten as -1 - e.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(long long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Cyclotomic epsilon() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return a_; }
  const Rational& eps() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  /// Image under e -> e^2 = -1 - e.
  Cyclotomic conjugate() const { return {a_ - b_, -b_}; }

  /// (a + b e)(a + b e^2) = a^2 - ab + b^2.
  Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

  Cyclotomic inv() const {
    auto n = norm();
    if (n.is_zero()) throw DivisionByZero();
    auto c = conjugate();
    return {c.a_ / n, c.b_ / n};
  }

  Cyclotomic operator-() const { return {-a_, -b_}; }
  Cyclotomic& operator+=(const Cyclotomic& o) { a_ += o.a_; b_ += o.b_; return *this; }
  Cyclotomic& operator-=(const Cyclotomic& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  Cyclotomic& operator*=(const Cyclotomic& o) {
    // (a + b e)(c + d e) = ac + (ad + bc) e + bd e^2 = (ac - bd) + (ad + bc - bd) e
    Rational bd = b_ * o.b_;
    Rational re = a_ * o.a_ - bd;
    Rational ep = a_ * o.b_ + b_ * o.a_ - bd;
    a_ = std::move(re);
    b_ = std::move(ep);
    return *this;
  }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inv(); }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.a_ == b.a_ && a.b_ == b.b_; }

  /// "3", "e", "-2*e", "-1-e", "1/2+3*e".
  std::string to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string eps_part = eps_text(b_);
    if (a_.is_zero()) return eps_part;
    std::string s = a_.to_string();
    if (b_.sign() > 0) s += '+';
    return s + eps_part;
  }

  CoefficientText coefficient_text() const {
    if (b_.is_zero()) return a_.coefficient_text();
    if (a_.is_zero()) return {b_.sign() < 0, eps_text(b_.sign() < 0 ? -b_ : b_), false};
    return {false, to_string(), true};
  }

 private:
  static std::string eps_text(const Rational& b) {
    if (b.is_one()) return "e";
    if ((-b).is_one()) return "-e";
    return b.to_string() + "*e";
  }

  Rational a_;
  Rational b_;
};

// ---------------------------------------------------------------------------------------------------------------
// Prime field

/// Residue modulo a prime. The modulus travels with the value; mixing moduli throws.
class PrimeScalar {
 public:
  PrimeScalar() = default;
  PrimeScalar(std::uint64_t residue, std::uint64_t modulus) : r_(residue % modulus), p_(modulus) {}

  std::uint64_t residue() const { return r_; }
  std::uint64_t modulus() const { return p_; }

  bool is_zero() const { return r_ == 0; }
  bool is_one() const { return r_ == 1; }

  PrimeScalar pow(std::uint64_t e) const {
    PrimeScalar result(1, p_), base = *this;
    for (; e; e >>= 1) {
      if (e & 1) result *= base;
      base *= base;
    }
    return result;
  }

  PrimeScalar inv() const {
    if (is_zero()) throw DivisionByZero();
    return pow(p_ - 2);
  }

  PrimeScalar operator-() const { return {r_ == 0 ? 0 : p_ - r_, p_}; }
  PrimeScalar& operator+=(const PrimeScalar& o) {
    check(o);
    r_ = (r_ + o.r_) % p_;
    return *this;
  }
  PrimeScalar& operator-=(const PrimeScalar& o) {
    check(o);
    r_ = (r_ + p_ - o.r_) % p_;
    return *this;
  }
  PrimeScalar& operator*=(const PrimeScalar& o) {
    check(o);
    r_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r_) * o.r_ % p_);
    return *this;
  }
  PrimeScalar& operator/=(const PrimeScalar& o) {
    check(o);
    return *this *= o.inv();
  }
  friend PrimeScalar operator+(PrimeScalar a, const PrimeScalar& b) { return a += b; }
  friend PrimeScalar operator-(PrimeScalar a, const PrimeScalar& b) { return a -= b; }
  friend PrimeScalar operator*(PrimeScalar a, const PrimeScalar& b) { return a *= b; }
  friend PrimeScalar operator/(PrimeScalar a, const PrimeScalar& b) { return a /= b; }
  friend bool operator==(const PrimeScalar& a, const PrimeScalar& b) {
    a.check(b);
    return a.r_ == b.r_;
  }

  std::string to_string() const { return std::to_string(r_); }
  CoefficientText coefficient_text() const { return {false, to_string(), false}; }

 private:
  void check(const PrimeScalar& o) const {
    if (p_ != o.p_) throw FieldError("mixed field modes: GF(" + std::to_string(p_) + ") vs GF(" + std::to_string(o.p_) + ")");
  }

  std::uint64_t r_ = 0;
  std::uint64_t p_ = 0;
};

// ---------------------------------------------------------------------------------------------------------------
// Field descriptors

struct RationalField {
  using value_type = Rational;

  Rational from_int(long long n) const { return Rational(n); }
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  /// No element of multiplicative order 3 exists in Q.
  std::optional<Rational> primitive_cbrt_unity() const { return std::nullopt; }
  FieldMode mode() const { return {FieldMode::Kind::Rational, 0}; }
  bool operator==(const RationalField&) const = default;
};

struct CyclotomicField {
  using value_type = Cyclotomic;

  Cyclotomic from_int(long long n) const { return Cyclotomic(n); }
  Cyclotomic zero() const { return Cyclotomic(0); }
  Cyclotomic one() const { return Cyclotomic(1); }
  std::optional<Cyclotomic> primitive_cbrt_unity() const { return Cyclotomic::epsilon(); }
  FieldMode mode() const { return {FieldMode::Kind::Cyclotomic, 0}; }
  bool operator==(const CyclotomicField&) const = default;
};

/// GF(p). Construction rejects composite p and p != 1 (mod 3), so a primitive cube root of unity always exists.
class PrimeField {
 public:
  using value_type = PrimeScalar;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
    if (p % 3 != 1) throw FieldError("modulus " + std::to_string(p) + " is not 1 mod 3; no cube root of unity");
    for (std::uint64_t g = 2; g < p; ++g) {
      PrimeScalar s(g, p);
      if (s * s * s == one()) {
        cbrt_ = g;
        break;
      }
    }
  }

  std::uint64_t modulus() const { return p_; }

  PrimeScalar from_int(long long n) const {
    long long m = static_cast<long long>(p_);
    return {static_cast<std::uint64_t>(((n % m) + m) % m), p_};
  }
  PrimeScalar zero() const { return {0, p_}; }
  PrimeScalar one() const { return {1, p_}; }
  /// Smallest residue of multiplicative order 3.
  std::optional<PrimeScalar> primitive_cbrt_unity() const { return PrimeScalar(cbrt_, p_); }
  FieldMode mode() const { return {FieldMode::Kind::Prime, p_}; }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint64_t p_;
  std::uint64_t cbrt_ = 0;
};

template <class F>
concept CoefficientField = std::equality_comparable<F> && requires(const F f, const typename F::value_type a,
                                                                   long long n) {
  typename F::value_type;
  { f.from_int(n) } -> std::same_as<typename F::value_type>;
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.primitive_cbrt_unity() } -> std::same_as<std::optional<typename F::value_type>>;
  { f.mode() } -> std::same_as<FieldMode>;
  { a + a } -> std::same_as<typename F::value_type>;
  { a - a } -> std::same_as<typename F::value_type>;
  { a * a } -> std::same_as<typename F::value_type>;
  { a / a } -> std::same_as<typename F::value_type>;
  { -a } -> std::same_as<typename F::value_type>;
  { a == a } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inv() } -> std::same_as<typename F::value_type>;
  { a.to_string() } -> std::same_as<std::string>;
  { a.coefficient_text() } -> std::same_as<CoefficientText>;
};

template <CoefficientField F>
using ScalarOf = typename F::value_type;

/// Element of multiplicative order 3, or nothing when the field has none.
template <CoefficientField F>
std::optional<ScalarOf<F>> primitive_cbrt_unity(const F& field) {
  return field.primitive_cbrt_unity();
}

/// Like primitive_cbrt_unity but throws FieldError naming the caller's need.
template <CoefficientField F>
ScalarOf<F> require_epsilon(const F& field, std::string_view what) {
  auto e = field.primitive_cbrt_unity();
  if (!e) throw FieldError(std::string(what) + " requires a cube root of unity, which " + field.mode().to_string() + " mode lacks");
  return *e;
}

template <CoefficientField F>
ScalarOf<F> power(const F& field, ScalarOf<F> base, unsigned e) {
  auto result = field.one();
  for (; e; e >>= 1) {
    if (e & 1) result = result * base;
    base = base * base;
  }
  return result;
}

enum class ScalarOp { add, sub, mul, div, neg, inv };

/// Single entry point mirroring the arithmetic table; neg and inv ignore rhs.
template <CoefficientField F>
ScalarOf<F> scalar_arith(ScalarOp op, const ScalarOf<F>& lhs, const ScalarOf<F>& rhs) {
  switch (op) {
    case ScalarOp::add: return lhs + rhs;
    case ScalarOp::sub: return lhs - rhs;
    case ScalarOp::mul: return lhs * rhs;
    case ScalarOp::div: return lhs / rhs;
    case ScalarOp::neg: return -lhs;
    case ScalarOp::inv: return lhs.inv();
  }
  throw FieldError("unknown scalar operation");
}

}  // namespace epa
