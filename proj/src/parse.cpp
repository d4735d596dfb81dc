#include "qz/parse.hpp"

#include <cctype>
#include <cstddef>

#include "qz/errors.hpp"

namespace qz {

namespace {

struct Parser {
  const FieldPtr& f;
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void bad(const std::string& what) {
    fail("MalformedInput", what + " at position " + std::to_string(pos) + " in \"" + s + "\"");
  }

  Elem expr() {
    Elem v = term();
    while (true) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  Elem term() {
    Elem v = factor();
    while (true) {
      if (eat('*'))
        v = v * factor();
      else if (eat('/'))
        v = v / factor();
      else
        return v;
    }
  }

  Elem factor() {
    if (eat('-')) return -factor();
    Elem v = primary();
    if (eat('^')) {
      bool neg = eat('-');
      long e = exponent();
      v = v.pow(neg ? -e : e);
    }
    return v;
  }

  long exponent() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) bad("expected an exponent");
    if (pos - start > 6) bad("exponent out of range");
    return std::stol(s.substr(start, pos - start));
  }

  Elem primary() {
    skip();
    if (eat('(')) {
      Elem v = expr();
      if (!eat(')')) bad("expected ')'");
      return v;
    }
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return Elem::integer(f, Int(s.substr(start, pos - start)));
    }
    if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      return resolve(s.substr(start, pos - start));
    }
    bad("expected a value");
  }

  Elem resolve(const std::string& name) {
    for (FieldPtr g = f;;) {
      switch (g->kind()) {
        case Field::Kind::rationals:
        case Field::Kind::prime:
          bad("unknown symbol '" + name + "' over " + f->describe());
        case Field::Kind::extension:
        case Field::Kind::rational_functions:
          if (g->var() == name) return embed(f, Elem::generator(g));
          g = g->base();
      }
    }
  }
};

}  // namespace

Elem parse_elem(const FieldPtr& f, const std::string& s) {
  Parser p{f, s};
  Elem v = p.expr();
  p.skip();
  if (p.pos != s.size()) p.bad("trailing characters");
  return v;
}

Poly parse_poly(const FieldPtr& base, const std::string& var, const std::string& s) {
  FieldPtr wrap = Field::rational_functions(base, var);
  Elem v = parse_elem(wrap, s);
  if (v.is_zero()) return Poly(base);
  Poly den = v.den_poly();
  if (den.deg() != 0) fail("MalformedInput", "not a polynomial: \"" + s + "\"");
  return v.num_poly();
}

}  // namespace qz
