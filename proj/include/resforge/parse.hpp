#ifndef RESFORGE_PARSE_HPP
#define RESFORGE_PARSE_HPP

#include "resforge/polynomial.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace resforge {

/// Minimal polynomial expression parser: integers, registry variable names,
/// + - * / ^ and parentheses. Division is only defined by nonzero constants.
class PolyParser {
 public:
  explicit PolyParser(const VariableRegistry* reg) : reg_(reg) {}

  Polynomial parse(const std::string& text) const {
    Cursor c{text, 0};
    Polynomial p = parse_sum(c);
    skip_ws(c);
    if (c.pos != text.size()) throw std::invalid_argument("parse error at '" + text.substr(c.pos) + "'");
    return p;
  }

 private:
  struct Cursor {
    const std::string& s;
    std::size_t pos;
  };

  static void skip_ws(Cursor& c) {
    while (c.pos < c.s.size() && std::isspace(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
  }

  static bool eat(Cursor& c, char ch) {
    skip_ws(c);
    if (c.pos < c.s.size() && c.s[c.pos] == ch) {
      ++c.pos;
      return true;
    }
    return false;
  }

  Polynomial parse_sum(Cursor& c) const {
    Polynomial acc = parse_product(c);
    for (;;) {
      if (eat(c, '+'))
        acc += parse_product(c);
      else if (eat(c, '-'))
        acc -= parse_product(c);
      else
        return acc;
    }
  }

  Polynomial parse_product(Cursor& c) const {
    Polynomial acc = parse_power(c);
    for (;;) {
      if (eat(c, '*')) {
        acc *= parse_power(c);
      } else if (eat(c, '/')) {
        Polynomial d = parse_power(c);
        if (!d.is_constant() || d.is_zero())
          throw std::invalid_argument("parse error: division only by nonzero constants");
        acc = acc * (Rational(1) / d.constant_value());
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_power(Cursor& c) const {
    Polynomial base = parse_atom(c);
    if (eat(c, '^')) {
      skip_ws(c);
      std::size_t start = c.pos;
      while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
      if (start == c.pos) throw std::invalid_argument("parse error: exponent expected");
      return base.pow(std::stoi(c.s.substr(start, c.pos - start)));
    }
    return base;
  }

  Polynomial parse_atom(Cursor& c) const {
    skip_ws(c);
    if (c.pos >= c.s.size()) throw std::invalid_argument("parse error: unexpected end of input");
    char ch = c.s[c.pos];
    if (ch == '(') {
      ++c.pos;
      Polynomial p = parse_sum(c);
      if (!eat(c, ')')) throw std::invalid_argument("parse error: expected ')'");
      return p;
    }
    if (ch == '-') {
      ++c.pos;
      return -parse_power(c);
    }
    if (ch == '+') {
      ++c.pos;
      return parse_power(c);
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = c.pos;
      while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
      return Polynomial::constant(reg_, Rational::from_string(c.s.substr(start, c.pos - start), "1"));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = c.pos;
      while (c.pos < c.s.size()) {
        char d = c.s[c.pos];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '(' || d == ')' || d == ',' || d == '^') {
          // registry names may contain (i,j) and ^k suffixes; greedily match
          // the longest known variable name
          ++c.pos;
        } else {
          break;
        }
      }
      // backtrack to the longest prefix that names a variable
      for (std::size_t end = c.pos; end > start; --end) {
        std::string candidate = c.s.substr(start, end - start);
        int v = reg_->find(candidate);
        if (v >= 0) {
          c.pos = end;
          return Polynomial::variable(reg_, v);
        }
      }
      throw std::invalid_argument("parse error: unknown variable '" + c.s.substr(start, c.pos - start) + "'");
    }
    throw std::invalid_argument(std::string("parse error: unexpected character '") + ch + "'");
  }

  const VariableRegistry* reg_;
};

}  // namespace resforge

#endif
