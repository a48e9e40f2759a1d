#pragma once

#include <cstddef>
#include <vector>

#include "polydiv/membership.hpp"
#include "polydiv/polynomial.hpp"

namespace polydiv {

// Annihilation of the residue current of a monomial complete intersection
// z_{k_1}^{a_1}, ..., z_{k_m}^{a_m}. The current is a tensor product of
// one-variable currents ∂̄[1/z^a], so φ·R = 0 reduces to the one-variable
// rule z^k ∂̄[1/z^p] = ∂̄[1/z^{p-k}] applied monomial by monomial.

struct CoordinatePower {
  std::size_t var = 0;  // exponent slot of the variable in the polynomial ring
  unsigned exponent = 1;
};

class MonomialCI {
 public:
  /// nvars is n for affine data (slots z1..zn) or n + 1 when homogeneous
  /// (slots z0..zn). Throws unless variables are distinct and in range and
  /// every exponent is >= 1.
  MonomialCI(std::size_t nvars, std::vector<CoordinatePower> gens, bool homogeneous = false);

  /// Recognises generators of the form c·z_k^a (c != 0) and normalises c to 1.
  static MonomialCI from_generators(const GeneratorSystem& g);

  std::size_t nvars() const noexcept { return nvars_; }
  bool homogeneous() const noexcept { return homogeneous_; }
  const std::vector<CoordinatePower>& gens() const noexcept { return gens_; }

  /// The generators as an affine generator system (requires !homogeneous()).
  GeneratorSystem as_generator_system() const;

 private:
  std::size_t nvars_;
  std::vector<CoordinatePower> gens_;
  bool homogeneous_;
};

/// Pole order of z^k·∂̄[1/z^p]; 0 means the current vanishes.
struct OneVarCurrent {
  unsigned pole_order = 0;
  bool vanishes() const noexcept { return pole_order == 0; }
};

OneVarCurrent onevar_reduce(unsigned k, unsigned p);

/// φ·R^f = 0 for the monomial complete intersection.
bool annihilates(const MonomialCI& ci, const Polynomial& phi);

/// annihilates(ci, z0^s φ) for a homogeneous ci on P^n.
bool annihilates_projective(const MonomialCI& ci, const HomogeneousSection& phi, unsigned z0_power);

/// The duality theorem read through the exact solver: Φ ∈ (F) with
/// deg F_j Q_j <= deg Φ.
bool duality_oracle(const GeneratorSystem& g, const Polynomial& phi);

}  // namespace polydiv
