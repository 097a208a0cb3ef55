#pragma once

/**
 * @file parse.hpp
 * @brief Recursive-descent parser for polynomial expressions, scalars and matrices.
 *
 * Grammar (no implicit multiplication):
 *
 *     expr   := term (('+' | '-') term)*
 *     term   := unary (('*' | '/') unary)*
 *     unary  := '-' unary | power
 *     power  := atom ('^' INTEGER)?
 *     atom   := INTEGER | 'e' | VARIABLE | '(' expr ')'
 *
 * so '^' binds tighter than unary minus, which binds tighter than '*' and '/'. Division is only by nonzero
 * constants. 'e' is the cube root of unity of the field and is rejected in rational mode.
 */

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "epa/morphism.hpp"

namespace epa {

namespace detail {

template <CoefficientField F>
class PolyParser {
 public:
  PolyParser(std::string_view text, const F& field, const VarNames& names) : s_(text), field_(field), names_(names) {}

  Poly<F> parse() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty expression");
    auto p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly<F> expr() {
    auto p = term();
    for (;;) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Poly<F> term() {
    auto p = unary();
    for (;;) {
      if (accept('*')) {
        p = p * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        auto d = unary();
        if (!d.is_constant()) throw ParseError("division by a non-constant", at);
        if (d.is_zero()) throw ParseError("division by zero", at);
        p = p.scale(d.constant_value().inv());
      } else {
        return p;
      }
    }
  }

  Poly<F> unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Poly<F> power() {
    auto base = atom();
    if (!accept('^')) return base;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '-') fail("negative exponent");
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
    auto e = integer_literal();
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '('))
      fail("expected operator (implicit multiplication is not supported)");
    return base.pow(e);
  }

  long long integer_literal() {
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > 100000000000000LL) throw ParseError("integer literal too long", start);
      v = v * 10 + (s_[pos_++] - '0');
    }
    return v;
  }

  Poly<F> atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    Poly<F> result(field_);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Poly<F> value = Poly<F>::constant(field_, 0);
      const auto ten = field_.from_int(10);
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        value = value.scale(ten) + Poly<F>::constant(field_, s_[pos_++] - '0');
      result = value;
    } else if (c == '(') {
      ++pos_;
      result = expr();
      if (!accept(')')) fail("expected ')'");
    } else if (c == 'e') {
      auto e = field_.primitive_cbrt_unity();
      if (!e) fail("'e' (cube root of unity) is not available in " + field_.mode().to_string() + " mode");
      ++pos_;
      result = Poly<F>::constant(field_, *e);
    } else {
      int k = 0;
      while (k < 3 && names_[k] != c) ++k;
      if (k == 3) fail(std::string("unexpected '") + c + "'");
      ++pos_;
      result = Poly<F>::variable(field_, kVars[k]);
    }
    // An atom directly followed by another atom would be implicit multiplication.
    if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '('))
      fail("expected operator (implicit multiplication is not supported)");
    return result;
  }

  std::string_view s_;
  const F& field_;
  VarNames names_;
  std::size_t pos_ = 0;
};

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k)
    if (k == s.size() || s[k] == sep) {
      out.push_back(s.substr(start, k - start));
      start = k + 1;
    }
  return out;
}

}  // namespace detail

template <CoefficientField F>
Poly<F> parse_poly(std::string_view text, const F& field, const VarNames& names = kXYZ) {
  return detail::PolyParser<F>(text, field, names).parse();
}

/// Any constant expression: "2", "-1/3", "1+2*e", "(e)^2".
template <CoefficientField F>
ScalarOf<F> parse_scalar(std::string_view text, const F& field) {
  auto p = parse_poly(text, field);
  if (!p.is_constant()) throw ParseError("expected a constant, got '" + std::string(text) + "'", 0);
  return p.constant_value();
}

/// Nine scalars, row-major, rows separated by ';' and entries by ','.
template <CoefficientField F>
LinearMap<F> parse_matrix(std::string_view text, const F& field) {
  auto rows = detail::split(text, ';');
  if (rows.size() != 3) throw ParseError("matrix needs 3 rows separated by ';'", 0);
  typename LinearMap<F>::Entries b{};
  for (int r = 0; r < 3; ++r) {
    auto cells = detail::split(rows[r], ',');
    if (cells.size() != 3) throw ParseError("matrix row " + std::to_string(r + 1) + " needs 3 entries", 0);
    for (int c = 0; c < 3; ++c) b[r][c] = parse_scalar(cells[c], field);
  }
  return LinearMap<F>(field, std::move(b));
}

/// Comma-separated scalars, e.g. "2,0,1" for an AutWord or "k1,k2,k3" for a circulant map.
template <CoefficientField F>
std::vector<ScalarOf<F>> parse_scalar_list(std::string_view text, const F& field) {
  std::vector<ScalarOf<F>> out;
  for (auto cell : detail::split(text, ',')) out.push_back(parse_scalar(cell, field));
  return out;
}

template <CoefficientField F>
std::string format_poly(const Poly<F>& p, const VarNames& names = kXYZ) {
  return p.to_string(names);
}

}  // namespace epa
