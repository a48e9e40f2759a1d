#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace polydiv {

using Complex = std::complex<double>;
using Mask = std::uint32_t;

/// Generator numbering of the exterior algebra used by the integral
/// formulas, in canonical order:
///   dζ_1..dζ_n, dζ̄_1..dζ̄_n, ε_1..ε_m, ε*_1..ε*_m, ε̃_1..ε̃_m.
/// All generators are odd. Indices passed to the accessors are 0-based.
class FormLayout {
 public:
  FormLayout(std::size_t n, std::size_t m);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }

  unsigned dz(std::size_t k) const { return static_cast<unsigned>(k); }
  unsigned dzbar(std::size_t k) const { return static_cast<unsigned>(n_ + k); }
  unsigned eps(std::size_t j) const { return static_cast<unsigned>(2 * n_ + j); }
  unsigned eps_star(std::size_t j) const { return static_cast<unsigned>(2 * n_ + m_ + j); }
  unsigned eps_tilde(std::size_t j) const { return static_cast<unsigned>(2 * n_ + 2 * m_ + j); }

  Mask holomorphic_mask() const noexcept;
  Mask antiholomorphic_mask() const noexcept;
  Mask eps_mask() const noexcept;
  Mask eps_star_mask() const noexcept;
  Mask tilde_mask() const noexcept;
  /// dζ_1..dζ_n dζ̄_1..dζ̄_n: the bidegree (n,n) slot.
  Mask top_mask() const noexcept { return holomorphic_mask() | antiholomorphic_mask(); }

  friend bool operator==(const FormLayout&, const FormLayout&) = default;

 private:
  std::size_t n_;
  std::size_t m_;
};

/// Sign of mono(a) ∧ mono(b) relative to mono(a | b) for disjoint masks.
int wedge_sign(Mask a, Mask b) noexcept;

/// Element of the exterior algebra with complex coefficients (the value of
/// a form at one point). Terms are kept sorted by mask with no explicit zeros.
class FormElement {
 public:
  struct Term {
    Mask mask;
    Complex coeff;
  };

  explicit FormElement(FormLayout layout) : layout_(layout) {}

  static FormElement scalar(FormLayout layout, Complex c);
  static FormElement generator(FormLayout layout, unsigned bit, Complex c = 1.0);

  const FormLayout& layout() const noexcept { return layout_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Complex coefficient(Mask mask) const;
  Complex scalar_part() const { return coefficient(0); }
  /// Coefficient of dζ_1..dζ_n dζ̄_1..dζ̄_n.
  Complex top_coefficient() const { return coefficient(layout_.top_mask()); }

  FormElement& operator+=(const FormElement& other);
  FormElement& operator-=(const FormElement& other);
  FormElement& operator*=(Complex c);
  friend FormElement operator+(FormElement a, const FormElement& b) { return a += b; }
  friend FormElement operator-(FormElement a, const FormElement& b) { return a -= b; }
  friend FormElement operator*(FormElement a, Complex c) { return a *= c; }
  friend FormElement operator*(Complex c, FormElement a) { return a *= c; }

  /// Left interior derivative with respect to one generator.
  FormElement contract(unsigned bit) const;
  /// Removes every term whose mask meets `mask`.
  FormElement drop(Mask mask) const;
  /// Keeps only terms whose mask is a subset of `mask`.
  FormElement restrict_to(Mask mask) const;
  /// exp of an even element (terminates by nilpotency).
  FormElement exp() const;
  FormElement power(unsigned k) const;
  /// γ' in γ = γ' ∧ (Σ_j ε*_j∧ε_j)^m/m! + γ''.
  FormElement epsilon_integral() const;

 private:
  friend FormElement exterior_product(const FormElement& a, const FormElement& b);
  void normalize();

  FormLayout layout_;
  std::vector<Term> terms_;
};

/// Graded anticommutative product.
FormElement exterior_product(const FormElement& a, const FormElement& b);

}  // namespace polydiv
