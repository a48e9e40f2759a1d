#include "polydiv/complex_polynomial.hpp"

#include <cmath>
#include <cstdio>

#include "polydiv/error.hpp"

namespace polydiv {

ComplexPolynomial::ComplexPolynomial(const Polynomial& exact) : nvars_(exact.nvars()) {
  terms_.reserve(exact.size());
  for (const auto& [m, c] : exact.terms()) terms_.push_back({m, Complex(c.get_d(), 0.0)});
}

void ComplexPolynomial::add_term(const Monomial& m, Complex c) {
  if (m.nvars() != nvars_) throw DimensionError("monomial does not match polynomial ring");
  for (auto& t : terms_) {
    if (t.monomial == m) {
      t.coefficient += c;
      return;
    }
  }
  terms_.push_back({m, c});
}

int ComplexPolynomial::degree(double tol) const {
  int d = -1;
  for (const auto& t : terms_)
    if (std::abs(t.coefficient) > tol) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

Complex ComplexPolynomial::operator()(std::span<const Complex> point) const {
  if (point.size() != nvars_) throw DimensionError("evaluation point has the wrong length");
  Complex sum(0.0);
  for (const auto& t : terms_) {
    Complex v = t.coefficient;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (Monomial::Exponent e = 0; e < t.monomial[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

std::string format_complex(Complex v, int digits) {
  char re[64];
  char im[64];
  std::snprintf(re, sizeof re, "%.*g", digits, v.real());
  std::snprintf(im, sizeof im, "%+.*g", digits, v.imag());
  return std::string("(") + re + im + "*i)";
}

std::string to_string(const ComplexPolynomial& p, int digits, VarBase base) {
  if (p.terms().empty()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    if (!out.empty()) out += " + ";
    out += format_complex(t.coefficient, digits);
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (t.monomial[i] == 0) continue;
      out += "*z" + std::to_string(i + static_cast<std::size_t>(base));
      if (t.monomial[i] > 1) out += "^" + std::to_string(t.monomial[i]);
    }
  }
  return out;
}

}  // namespace polydiv
