#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polydiv/polynomial.hpp"

namespace polydiv {

/// Polynomials h^1..h^n in 2n variables (ζ_1..ζ_n, z_1..z_n) with
/// Σ_k h^k·(ζ_k − z_k) = F(ζ) − F(z).
struct HeferDecomposition {
  std::size_t generator = 0;
  std::size_t n = 0;
  unsigned degree = 0;  // declared degree d of F
  std::vector<Polynomial> forms;
};

/// Telescoping construction. `degree` defaults to deg F (0 for F = 0) and
/// must be >= deg F.
HeferDecomposition hefer_decompose(const Polynomial& f, std::optional<unsigned> degree = std::nullopt,
                                   std::size_t generator = 0);

/// Exact check of the identity and of deg h^k <= d − 1.
bool verify_hefer(const Polynomial& f, const HeferDecomposition& h);

/// F(ζ) or F(z) as a polynomial in the 2n Hefer variables.
Polynomial embed_zeta(const Polynomial& f);
Polynomial embed_z(const Polynomial& f);

}  // namespace polydiv
