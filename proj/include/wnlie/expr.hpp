#ifndef WNLIE_EXPR_HPP
#define WNLIE_EXPR_HPP

#include <cctype>
#include <cstddef>
#include <vector>
#include <stdexcept>
#include <string>

#include "wnlie/derivation.hpp"

namespace wnlie {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  size_t position() const { return position_; }

private:
  size_t position_;
};

/// Recursive-descent parser for derivation expressions:
///   expr := ["+"|"-"] term (("+"|"-") term)*
///   term := [coef "*"?] monomial* core
///   core := "d" index | "E" | "(" expr ")"
///   coef := integer ["/" positive-integer]
///   monomial := "x" index ["^" exponent] ("*" monomial)*
/// Whitespace is insignificant. "E" expands to x1 d1 + ... + xn dn. A bare
/// "0" term is accepted and contributes nothing, so formatted zero
/// derivations parse back.
class ExprParser {
public:
  ExprParser(const std::string& text, int n) : text_(text), n_(n) {
    if (n < 1) throw std::invalid_argument("ExprParser: need n >= 1");
  }

  Derivation parse() {
    Derivation d = parse_expr();
    skip_ws();
    if (pos_ < text_.size()) throw ParseError("unexpected trailing input", pos_);
    return d;
  }

private:
  Derivation parse_expr() {
    Derivation total = Derivation::zero(n_);
    bool negate = false;
    skip_ws();
    if (peek() == '+' || peek() == '-') negate = take() == '-';
    while (true) {
      Derivation t = parse_term();
      total = negate ? total - t : total + t;
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        negate = take() == '-';
        continue;
      }
      return total;
    }
  }

  Derivation parse_term() {
    skip_ws();
    size_t term_start = pos_;
    Rational coef(1);
    bool saw_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      long long num = parse_integer("coefficient");
      long long den = 1;
      skip_ws();
      if (peek() == '/') {
        take();
        skip_ws();
        size_t den_pos = pos_;
        den = parse_integer("denominator");
        if (den <= 0) throw ParseError("denominator must be positive", den_pos);
      }
      coef = Rational(num, den);
      saw_coef = true;
      skip_ws();
      if (peek() == '*') take();
    }
    std::vector<int> exps(static_cast<size_t>(n_), 0);
    bool saw_mono = false;
    while (true) {
      skip_ws();
      if (peek() == 'x') {
        take();
        int idx = parse_index();
        int e = 1;
        skip_ws();
        if (peek() == '^') {
          take();
          skip_ws();
          size_t exp_pos = pos_;
          if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("malformed exponent", exp_pos);
          long long v = parse_integer("exponent");
          if (v > 1000) throw ParseError("malformed exponent", exp_pos);
          e = static_cast<int>(v);
        }
        exps[static_cast<size_t>(idx - 1)] += e;
        saw_mono = true;
        skip_ws();
        if (peek() == '*') take();
        continue;
      }
      break;
    }
    Polynomial factor = Polynomial::term(Monomial::from_exponents(exps), coef);
    skip_ws();
    char c = peek();
    if (c == 'd') {
      take();
      int idx = parse_index();
      return factor * Derivation::partial(n_, idx);
    }
    if (c == 'E') {
      take();
      return factor * euler(n_);
    }
    if (c == '(') {
      take();
      Derivation inner = parse_expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      take();
      return factor * inner;
    }
    if (saw_coef && !saw_mono && coef.is_zero()) return Derivation::zero(n_);
    throw ParseError("expected a derivation symbol d<index>, E, or '('", term_start);
  }

  int parse_index() {
    skip_ws();
    size_t at = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected a variable index", at);
    long long idx = parse_integer("index");
    if (idx < 1 || idx > n_) throw ParseError("variable index out of range", at);
    return static_cast<int>(idx);
  }

  long long parse_integer(const std::string& what) {
    skip_ws();
    size_t at = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected " + what, at);
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (take() - '0');
      if (v > 1000000000LL) throw ParseError(what + " too large", at);
    }
    return v;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }

  std::string text_;
  int n_;
  size_t pos_ = 0;
};

inline Derivation parse_derivation(const std::string& text, int n) {
  return ExprParser(text, n).parse();
}

}  // namespace wnlie

#endif  // WNLIE_EXPR_HPP
