#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polydiv/exact_linalg.hpp"
#include "polydiv/polynomial.hpp"

namespace polydiv {

/// Polynomials F_1..F_m in n variables with declared degrees d_j >= deg F_j.
class GeneratorSystem {
 public:
  /// Declared degrees default to the actual degrees. Throws on an empty list,
  /// a zero generator, a variable-count mismatch or d_j < deg F_j.
  GeneratorSystem(std::size_t n, std::vector<Polynomial> polys,
                  std::optional<std::vector<unsigned>> degrees = std::nullopt);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return polys_.size(); }
  const std::vector<Polynomial>& polys() const noexcept { return polys_; }
  const Polynomial& poly(std::size_t j) const { return polys_[j]; }
  const std::vector<unsigned>& degrees() const noexcept { return degrees_; }
  unsigned degree(std::size_t j) const { return degrees_[j]; }

 private:
  std::size_t n_;
  std::vector<Polynomial> polys_;
  std::vector<unsigned> degrees_;
};

/// Matrix of (Q_1..Q_m) -> Σ F_j Q_j restricted to deg Q_j <= r - d_j.
/// Row μ is a monomial of degree <= r; column (j, κ) holds the coefficients
/// of F_j·κ. Both index sets are in ascending grevlex order, columns grouped
/// by generator.
struct MacaulaySystem {
  int r = 0;
  std::vector<Monomial> rows;
  std::vector<std::pair<std::size_t, Monomial>> cols;
  ExactMatrix matrix;

  std::size_t row_index(const Monomial& m) const;
};

MacaulaySystem build_macaulay(const GeneratorSystem& g, int r);

/// Cofactors with Σ F_j Q_j = Φ^nu and max deg F_j Q_j <= r.
struct DivisionCertificate {
  std::vector<Polynomial> cofactors;
  unsigned nu = 1;
  int r = 0;
  bool verified = false;

  /// max_j deg(F_j Q_j), -1 when every product vanishes.
  int max_deg_fq(const GeneratorSystem& g) const;
};

struct DivisionOutcome {
  std::optional<DivisionCertificate> certificate;
  /// Macaulay row (monomial) at which the system is inconsistent.
  std::optional<Monomial> witness;

  bool feasible() const noexcept { return certificate.has_value(); }
};

/// Decides Φ ∈ (F) with deg F_j Q_j <= r by exact linear algebra. Infeasible
/// is a proof that no cofactors exist within the budget. Throws DegreeError
/// when deg Φ > r.
DivisionOutcome divide(const GeneratorSystem& g, const Polynomial& target, int r);

/// divide(g, 1, r).
DivisionOutcome bezout(const GeneratorSystem& g, int r);

struct PowerOutcome {
  unsigned nu = 0;  // 0 when infeasible
  DivisionOutcome outcome;
};

/// Smallest nu <= nu_max with Φ^nu ∈ (F) at budget budget(nu).
PowerOutcome power_divide(const GeneratorSystem& g, const Polynomial& target, unsigned nu_max,
                          const std::function<int(unsigned)>& budget);

/// Independent recomputation: Σ F_j Q_j == Φ^nu and max deg F_j Q_j <= r.
bool verify(const GeneratorSystem& g, const Polynomial& target, const DivisionCertificate& cert);

/// Element of Λ^ell E ⊗ L^r after dehomogenization: a polynomial per
/// strictly increasing index set J (0-based) with |J| = ell.
struct KoszulTuple {
  unsigned ell = 0;
  int r = 0;
  std::map<std::vector<std::size_t>, Polynomial> components;
};

struct KoszulOutcome {
  std::optional<KoszulTuple> psi;
  /// (index set, monomial) of an inconsistent row.
  std::optional<std::pair<std::vector<std::size_t>, Monomial>> witness;

  bool feasible() const noexcept { return psi.has_value(); }
};

/// Koszul map δ_f: ψ_{J'} contributes (-1)^p F_{J'[p]} ψ_{J'} to J' \ J'[p].
KoszulTuple koszul_apply(const GeneratorSystem& g, const KoszulTuple& psi);

/// Solves δ_f ψ = φ with deg ψ_{J'} <= r - Σ_{J'} d. Throws DegreeError when
/// a component of φ exceeds its own budget.
KoszulOutcome koszul_divide(const GeneratorSystem& g, const KoszulTuple& phi);

/// Outcome of the degree-threshold predicate.
struct Threshold {
  bool auto_satisfied = false;
  int minimal_r = 0;  // meaningful when !auto_satisfied
};

/// AutoSatisfied when m - ell <= n, otherwise the smallest r with
/// r >= (sum of the n + ell + 1 largest degrees) - n.
Threshold noll_threshold(std::vector<unsigned> degrees, std::size_t n, unsigned ell = 0);

enum class BudgetMode { Skolk, Oppo };

struct PowerBudget {
  unsigned power = 0;
  int degree_budget = 0;
  bool condition_ok = false;
};

/// Power min(m,n) and budget r_or_M·min(m,n) for Briançon–Skoda type
/// division, with the sufficient condition on the degrees. Both modes
/// share the same arithmetic; Oppo reads r_or_M as the Łojasiewicz exponent.
PowerBudget skolk_oppo_budget(std::vector<unsigned> degrees, std::size_t n, std::size_t m,
                              int r_or_M, BudgetMode mode);

// JSON certificate schema:
//   { "n", "generators", "declared_degrees", "target", "nu", "r",
//     "cofactors", "verified", "max_deg_fq" }
std::string certificate_to_json(const GeneratorSystem& g, const Polynomial& target,
                                const DivisionCertificate& cert, int indent = 2);

struct ParsedCertificate {
  GeneratorSystem generators;
  Polynomial target;
  DivisionCertificate certificate;
  bool claimed_verified = false;
};

/// Throws Error (or ParseError) on schema violations.
ParsedCertificate certificate_from_json(const std::string& text);

}  // namespace polydiv
