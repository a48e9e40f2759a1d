#pragma once

#include <span>
#include <string>
#include <vector>

#include "polydiv/polynomial.hpp"

namespace polydiv {

/// Polynomial with double-precision complex coefficients, stored as a flat
/// term list for fast repeated evaluation. Used for numeric cofactors and
/// for evaluating exact polynomials at quadrature nodes.
class ComplexPolynomial {
 public:
  struct Term {
    Monomial monomial;
    Complex coefficient;
  };

  explicit ComplexPolynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  explicit ComplexPolynomial(const Polynomial& exact);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  void add_term(const Monomial& m, Complex c);

  /// Largest total degree among terms with |coefficient| > tol; -1 if none.
  int degree(double tol = 0.0) const;

  Complex operator()(std::span<const Complex> point) const;

 private:
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Prints coefficients with `digits` significant digits as "(re+im*i)".
std::string to_string(const ComplexPolynomial& p, int digits = 12, VarBase base = VarBase::Affine);

/// Formats a complex value with the given number of significant digits.
std::string format_complex(Complex v, int digits = 12);

}  // namespace polydiv
