#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace polydiv {

/// Exponent vector of a monomial. The length is the variable count of the
/// ring it lives in; all arithmetic requires equal lengths.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  /// x_var^power in a ring with nvars variables.
  static Monomial unit(std::size_t nvars, std::size_t var, Exponent power = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  unsigned degree() const noexcept;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires divides(*this) on the divisor.
  Monomial operator/(const Monomial& divisor) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Graded reverse lexicographic order with x_0 > x_1 > ... .
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(a, b); }
};

/// All monomials of total degree exactly `degree`, ascending grevlex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

/// All monomials of total degree <= `degree`, ascending grevlex. Empty for a
/// negative bound.
std::vector<Monomial> monomials_up_to(std::size_t nvars, int degree);

/// Number of monomials of degree <= degree in nvars variables, C(nvars+degree, nvars).
std::size_t count_monomials_up_to(std::size_t nvars, int degree);

}  // namespace polydiv
