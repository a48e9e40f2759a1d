#include <cctype>
#include <sstream>

#include "polydiv/error.hpp"
#include "polydiv/polynomial.hpp"

namespace polydiv {

namespace {

// Grammar (whitespace-insensitive):
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := coeff | var ['^' nat] | '(' poly ')' ['^' nat]
//   coeff  := nat ['/' nat]
//   var    := 'z' nat
class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars, VarBase base)
      : text_(text), nvars_(nvars), base_(static_cast<std::size_t>(base)) {}

  Polynomial run() {
    Polynomial p = poly();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  int peek() {
    skip_ws();
    return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1;
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  mpz_class nat() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned small_nat(const char* what) {
    const std::size_t start = pos_;
    mpz_class v = nat();
    if (!v.fits_uint_p() || v > 100000) {
      pos_ = start;
      fail(std::string(what) + " is too large");
    }
    return static_cast<unsigned>(v.get_ui());
  }

  bool starts_factor() {
    const int c = peek();
    return c == '(' || c == 'z' || (c >= '0' && c <= '9');
  }

  Polynomial poly() {
    const bool negate = accept('-');
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    const int c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = poly();
      expect(')');
      if (accept('^')) inner = pow(inner, small_nat("exponent"));
      return inner;
    }
    if (c == 'z') {
      const std::size_t var_pos = pos_;
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected a variable index after 'z'");
      const unsigned index = small_nat("variable index");
      if (index < base_ || index - base_ >= nvars_) {
        pos_ = var_pos;
        fail("variable z" + std::to_string(index) + " out of range");
      }
      unsigned e = 1;
      if (accept('^')) e = small_nat("exponent");
      return Polynomial::term(Monomial::unit(nvars_, index - base_, e), 1);
    }
    if (c >= '0' && c <= '9') {
      mpz_class num = nat();
      mpz_class den = 1;
      if (accept('/')) {
        const std::size_t den_pos = pos_;
        den = nat();
        if (den == 0) {
          pos_ = den_pos;
          fail("zero denominator");
        }
      }
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::constant(nvars_, q);
    }
    if (c < 0) fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
  }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::vector<std::string> default_names(std::size_t nvars, VarBase base) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i)
    names.push_back("z" + std::to_string(i + static_cast<std::size_t>(base)));
  return names;
}

}  // namespace

Polynomial parse(std::string_view text, std::size_t nvars, VarBase base) {
  return Parser(text, nvars, base).run();
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Polynomial& p, VarBase base) {
  const auto names = default_names(p.nvars(), base);
  return to_string(p, names);
}

std::string to_string(const Polynomial& p, std::span<const std::string> names) {
  if (names.size() != p.nvars()) throw DimensionError("wrong number of variable names");
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    bool need_star = false;
    if (m.degree() == 0 || mag != 1) {
      out << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) out << '*';
      out << names[i];
      if (m[i] > 1) out << '^' << m[i];
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace polydiv
