#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "polydiv/monomial.hpp"

namespace polydiv {

/// Exact rational coefficient; GMP keeps it in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using Complex = std::complex<double>;

/// Sparse multivariate polynomial over Q. Terms are stored without zero
/// coefficients and iterate in descending grevlex order.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t var);
  static Polynomial term(const Monomial& m, const Rational& c);

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  std::size_t size() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  Rational coefficient(const Monomial& m) const;

  /// Adds c·m in place (removing the term if it cancels).
  void add_term(const Monomial& m, const Rational& c);

  /// True iff every term has total degree exactly d (the zero polynomial
  /// is homogeneous of every degree).
  bool is_homogeneous(unsigned d) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void require_same_ring(const Polynomial& other) const;

  std::size_t nvars_;
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, unsigned k);
Polynomial derivative(const Polynomial& p, std::size_t var);

Rational evaluate(const Polynomial& p, std::span<const Rational> point);
Complex evaluate(const Polynomial& p, std::span<const Complex> point);

/// How variable names map to exponent slots: affine polynomials use
/// z1..zn, homogeneous ones z0..zn.
enum class VarBase { Homogeneous = 0, Affine = 1 };

/// Parses the text grammar (see README). Throws ParseError.
Polynomial parse(std::string_view text, std::size_t nvars, VarBase base = VarBase::Affine);

/// Canonical print: grevlex-descending, explicit '*', '^' for exponents > 1.
std::string to_string(const Polynomial& p, VarBase base = VarBase::Affine);
std::string to_string(const Polynomial& p, std::span<const std::string> names);
std::string to_string(const Rational& q);

/// A homogeneous polynomial in z0..zn together with its line-bundle degree.
class HomogeneousSection {
 public:
  /// Throws DegreeError unless poly is homogeneous of the given degree.
  HomogeneousSection(Polynomial poly, unsigned degree);

  const Polynomial& poly() const noexcept { return poly_; }
  unsigned degree() const noexcept { return degree_; }
  /// Affine dimension n (the polynomial has n + 1 variables).
  std::size_t n() const noexcept { return poly_.nvars() - 1; }

 private:
  Polynomial poly_;
  unsigned degree_;
};

/// z0^d F(z'/z0). Throws DegreeError when d < deg F.
HomogeneousSection homogenize(const Polynomial& f, unsigned d);
/// Sets z0 = 1.
Polynomial dehomogenize(const HomogeneousSection& s);

/// Σ_j |f_j(z)|² / |z|^{2 d_j}; invariant under z -> λz.
double section_norm_sq(std::span<const HomogeneousSection> sections, std::span<const Complex> z);

}  // namespace polydiv
