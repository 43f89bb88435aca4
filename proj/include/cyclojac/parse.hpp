#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cyclojac/poly.hpp"

namespace cyclojac {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := base ('^' uint)?
// base   := rational | 'x' | '(' expr ')'
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  RationalPoly run() {
    RationalPoly p = expr();
    skip_ws();
    if (pos_ < s_.size()) throw ParseError("unexpected character", pos_);
    return p;
  }

 private:
  RationalPoly expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      ++pos_;
    }
    RationalPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      RationalPoly t = term();
      acc = (c == '+') ? acc + t : acc - t;
    }
  }

  RationalPoly term() {
    RationalPoly acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') return acc;
      ++pos_;
      acc = acc * factor();
    }
  }

  RationalPoly factor() {
    RationalPoly b = base();
    skip_ws();
    if (peek() != '^') return b;
    ++pos_;
    skip_ws();
    if (peek() == '-') throw ParseError("negative exponent", pos_);
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected exponent", pos_);
    unsigned long e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + static_cast<unsigned long>(peek() - '0');
      if (e > 1000) throw ParseError("exponent too large", pos_);
      ++pos_;
    }
    return b.pow(static_cast<unsigned>(e));
  }

  RationalPoly base() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RationalPoly p = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return p;
    }
    if (c == 'x') {
      ++pos_;
      return RationalPoly::variable();
    }
    if (std::isalpha(static_cast<unsigned char>(c)))
      throw ParseError("unknown variable (only 'x' is allowed)", pos_);
    if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
    throw ParseError("expected a number, 'x' or '('", pos_);
  }

  RationalPoly rational_literal() {
    const Integer num = integer_literal();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected denominator", pos_);
      const Integer den = integer_literal();
      if (den == 0) throw ParseError("zero denominator", at);
      Rational q(num, den);
      q.canonicalize();
      return RationalPoly::constant(q);
    }
    return RationalPoly::constant(Rational(num));
  }

  Integer integer_literal() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      ++pos_;
    }
    return Integer(digits, 10);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an arithmetic expression in the single variable x into a polynomial.
inline RationalPoly parse_polynomial(std::string_view text) { return detail::PolyParser(text).run(); }

}  // namespace cyclojac
