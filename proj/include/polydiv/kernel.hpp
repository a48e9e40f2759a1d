#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polydiv/complex_polynomial.hpp"
#include "polydiv/exterior.hpp"
#include "polydiv/hefer.hpp"
#include "polydiv/membership.hpp"
#include "polydiv/quadrature.hpp"

namespace polydiv {

/// α = α0 + α1 at a chart point ζ' for a fixed z'.
struct AlphaKernel {
  Complex alpha0;
  FormElement alpha1;
};

/// α0 = (1 + z'·conj(ζ'))/(1 + |ζ'|²) and α1 = −(1/2πi) ∂̄∂ log(1 + |ζ'|²)
/// written as Σ g_kl dζ̄_l∧dζ_k.
AlphaKernel make_alpha_kernel(const FormLayout& layout, std::span<const Complex> zeta,
                              std::span<const Complex> z);

/// C(n+r, n) Σ_nodes w·α0^r·Φ(ζ'). Throws DegreeError if r < deg Φ.
Complex bergman_reproduce(const Polynomial& phi, int r, std::span<const Complex> z,
                          const QuadratureRule& rule);
/// Several evaluation points in one pass over the nodes.
std::vector<Complex> bergman_reproduce(const Polynomial& phi, int r, const std::vector<std::vector<Complex>>& points,
                                       const QuadratureRule& rule);

/// U = Σ_k s∧(∂̄s)^{k-1}/‖f‖^{2k} at ζ' in the frame z0 = 1. Throws
/// NumericalError when ‖f‖² < norm_floor.
FormElement assemble_u(const GeneratorSystem& g, std::span<const Complex> zeta, double norm_floor = 1e-12);

/// Scalar part of δ_f U, i.e. Σ_j F_j(ζ')·(ι_{ε_j} U)_0.
Complex delta_f_scalar(const GeneratorSystem& g, std::span<const Complex> zeta, const FormElement& u);

struct KernelDivideOptions {
  double norm_floor = 1e-12;
  double fit_tolerance = 1e-8;  // relative least-squares residual
  unsigned oversample = 2;
};

struct KernelDivision {
  std::vector<ComplexPolynomial> cofactors;
  std::vector<int> degree_caps;  // D_j; deg Q_j <= D_j by construction
  int degree_bound = 0;          // d_1 + ... + d_{μ+1} + r, largest degrees first
  double fit_residual = 0.0;     // worst relative residual over j
  std::size_t samples = 0;
};

/// Cofactors Q_j(z') = ∫ T^j(·, z')Φ evaluated by quadrature at sample
/// points and recovered by a least-squares fit. Requires m >= 2, n in {1, 2}
/// and no common zero of the homogenized generators on P^n.
KernelDivision kernel_divide(const GeneratorSystem& g, const Polynomial& phi, int r, const QuadratureRule& rule,
                             const KernelDivideOptions& options = {});

/// Euclidean distance from the coefficient vector of q (Macaulay column
/// order) to the affine space of exact solutions at the given budget.
/// Throws Error when the exact system is infeasible.
double exact_subspace_distance(const GeneratorSystem& g, const Polynomial& phi, int budget,
                               const std::vector<ComplexPolynomial>& q);

}  // namespace polydiv
