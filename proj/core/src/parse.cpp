#include "liederiv/parse.hpp"

#include <cctype>

namespace liederiv {

namespace {

class ExprParser {
public:
  ExprParser(const std::string& text, const Vars& vars) : text_(text), vars_(vars) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return r;
  }

private:
  RationalFunction expr() {
    RationalFunction acc = term();
    while (true) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        acc = acc + term();
      } else if (peek() == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = factor();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (peek() == '/') {
        ++pos_;
        const RationalFunction d = factor();
        if (d.is_zero()) throw DivisionByZero("division by zero in expression");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction factor() {
    skip_ws();
    bool neg = false;
    while (peek() == '-' || peek() == '+') {
      if (peek() == '-') neg = !neg;
      ++pos_;
      skip_ws();
    }
    RationalFunction base = primary();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::string digits = read_digits();
      if (digits.empty()) fail("exponent expected after '^'");
      const unsigned long e = std::stoul(digits);
      RationalFunction acc = RationalFunction::one(base.vars());
      for (unsigned long i = 0; i < e; ++i) acc = acc * base;
      base = acc;
    }
    return neg ? -base : base;
  }

  RationalFunction primary() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      skip_ws();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string digits = read_digits();
      return RationalFunction::constant(vars_, parse_rational(digits));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::string name = read_ident();
      const std::size_t idx = vars_.index_of(name);
      if (idx == Vars::npos) fail("unknown variable '" + name + "'");
      return RationalFunction::variable(vars_, idx);
    }
    fail("unexpected character");
    return RationalFunction::zero(vars_); // unreachable
  }

  std::string read_digits() {
    std::string s;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) s += text_[pos_++];
    return s;
  }

  std::string read_ident() {
    std::string s;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
        s += text_[pos_++];
      else
        break;
    }
    return s;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  const std::string& text_;
  const Vars& vars_;
  std::size_t pos_ = 0;
};

} // namespace

RationalFunction parse_rational_function(const std::string& text, const Vars& vars) {
  return ExprParser(text, vars).parse();
}

Polynomial parse_polynomial(const std::string& text, const Vars& vars) {
  const RationalFunction f = parse_rational_function(text, vars);
  if (!f.is_polynomial()) throw ParseError("expected a polynomial, got '" + text + "'");
  return f.num();
}

} // namespace liederiv
