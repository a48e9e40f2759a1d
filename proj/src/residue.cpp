#include "polydiv/residue.hpp"

#include <algorithm>

#include "polydiv/error.hpp"

namespace polydiv {

MonomialCI::MonomialCI(std::size_t nvars, std::vector<CoordinatePower> gens, bool homogeneous)
    : nvars_(nvars), gens_(std::move(gens)), homogeneous_(homogeneous) {
  if (gens_.empty()) throw Error("a monomial complete intersection needs at least one generator");
  std::vector<bool> used(nvars_, false);
  for (const auto& g : gens_) {
    if (g.var >= nvars_) throw DimensionError("generator variable out of range");
    if (g.exponent < 1) throw DegreeError("generator exponents must be at least 1");
    if (used[g.var]) throw Error("generator variables must be pairwise distinct");
    used[g.var] = true;
  }
}

MonomialCI MonomialCI::from_generators(const GeneratorSystem& g) {
  std::vector<CoordinatePower> gens;
  for (const auto& p : g.polys()) {
    if (p.size() != 1) throw Error("generator is not a single coordinate power");
    const Monomial& m = p.terms().begin()->first;
    std::size_t var = 0;
    unsigned count = 0;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] > 0) {
        var = i;
        ++count;
      }
    }
    if (count != 1) throw Error("generator is not a single coordinate power");
    gens.push_back({var, m[var]});
  }
  return MonomialCI(g.n(), std::move(gens), false);
}

GeneratorSystem MonomialCI::as_generator_system() const {
  if (homogeneous_) throw Error("as_generator_system needs affine data");
  std::vector<Polynomial> polys;
  for (const auto& g : gens_) polys.push_back(Polynomial::term(Monomial::unit(nvars_, g.var, g.exponent), 1));
  return GeneratorSystem(nvars_, std::move(polys));
}

OneVarCurrent onevar_reduce(unsigned k, unsigned p) {
  return OneVarCurrent{k >= p ? 0u : p - k};
}

bool annihilates(const MonomialCI& ci, const Polynomial& phi) {
  if (phi.nvars() != ci.nvars()) throw DimensionError("target has the wrong number of variables");
  // Distinct monomials pair with linearly independent residual currents, so
  // φR = 0 iff every monomial kills some one-variable factor.
  for (const auto& [mono, coeff] : phi.terms()) {
    const bool killed = std::any_of(ci.gens().begin(), ci.gens().end(), [&](const CoordinatePower& g) {
      return onevar_reduce(mono[g.var], g.exponent).vanishes();
    });
    if (!killed) return false;
  }
  return true;
}

bool annihilates_projective(const MonomialCI& ci, const HomogeneousSection& phi, unsigned z0_power) {
  if (!ci.homogeneous()) throw Error("annihilates_projective needs a homogeneous complete intersection");
  if (phi.poly().nvars() != ci.nvars()) throw DimensionError("section lives in a different projective space");
  if (!phi.poly().is_homogeneous(phi.degree()))
    throw DegreeError("section is not homogeneous of its declared degree");
  const Polynomial shifted =
      Polynomial::term(Monomial::unit(ci.nvars(), 0, z0_power), 1) * phi.poly();
  return annihilates(ci, shifted);
}

bool duality_oracle(const GeneratorSystem& g, const Polynomial& phi) {
  const int r = std::max(phi.degree(), 0);
  return divide(g, phi, r).feasible();
}

}  // namespace polydiv
