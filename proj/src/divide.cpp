#include <algorithm>

#include "polydiv/error.hpp"
#include "polydiv/membership.hpp"

namespace polydiv {

int DivisionCertificate::max_deg_fq(const GeneratorSystem& g) const {
  int best = -1;
  for (std::size_t j = 0; j < cofactors.size() && j < g.m(); ++j) {
    if (cofactors[j].is_zero()) continue;
    best = std::max(best, g.poly(j).degree() + cofactors[j].degree());
  }
  return best;
}

bool verify(const GeneratorSystem& g, const Polynomial& target, const DivisionCertificate& cert) {
  if (cert.cofactors.size() != g.m()) return false;
  if (target.nvars() != g.n()) return false;
  Polynomial sum(g.n());
  for (std::size_t j = 0; j < g.m(); ++j) {
    if (cert.cofactors[j].nvars() != g.n()) return false;
    const Polynomial prod = g.poly(j) * cert.cofactors[j];
    if (prod.degree() > cert.r) return false;
    sum += prod;
  }
  return sum == pow(target, cert.nu);
}

DivisionOutcome divide(const GeneratorSystem& g, const Polynomial& target, int r) {
  if (r < 0) throw DegreeError("degree budget must be non-negative");
  if (target.nvars() != g.n()) throw DimensionError("target has the wrong number of variables");
  DivisionOutcome out;
  if (target.is_zero()) {
    DivisionCertificate cert;
    cert.cofactors.assign(g.m(), Polynomial(g.n()));
    cert.r = r;
    cert.verified = true;
    out.certificate = std::move(cert);
    return out;
  }
  if (target.degree() > r)
    throw DegreeError("target degree " + std::to_string(target.degree()) + " exceeds budget r = " +
                      std::to_string(r));

  const MacaulaySystem sys = build_macaulay(g, r);
  std::vector<Rational> rhs(sys.rows.size());
  for (const auto& [mono, coeff] : target.terms()) rhs[sys.row_index(mono)] = coeff;

  const SolveOutcome sol = solve(sys.matrix, rhs);
  if (!sol.solved()) {
    out.witness = sys.rows[*sol.witness_row];
    return out;
  }
  DivisionCertificate cert;
  cert.cofactors.assign(g.m(), Polynomial(g.n()));
  cert.r = r;
  for (std::size_t c = 0; c < sys.cols.size(); ++c) {
    if (sgn(sol.solution[c]) == 0) continue;
    const auto& [j, kappa] = sys.cols[c];
    cert.cofactors[j].add_term(kappa, sol.solution[c]);
  }
  cert.verified = verify(g, target, cert);
  if (!cert.verified) throw Error("internal error: solver produced a certificate that fails verification");
  out.certificate = std::move(cert);
  return out;
}

DivisionOutcome bezout(const GeneratorSystem& g, int r) {
  return divide(g, Polynomial::constant(g.n(), 1), r);
}

PowerOutcome power_divide(const GeneratorSystem& g, const Polynomial& target, unsigned nu_max,
                          const std::function<int(unsigned)>& budget) {
  if (nu_max < 1) throw Error("nu_max must be at least 1");
  PowerOutcome result;
  Polynomial power = Polynomial::constant(g.n(), 1);
  for (unsigned nu = 1; nu <= nu_max; ++nu) {
    power = power * target;
    const int r = budget(nu);
    // A budget below deg Φ^nu cannot hold any certificate.
    if (!power.is_zero() && power.degree() > r) continue;
    DivisionOutcome o = divide(g, power, r);
    if (o.feasible()) {
      o.certificate->nu = nu;
      result.nu = nu;
      result.outcome = std::move(o);
      return result;
    }
    result.outcome = std::move(o);
  }
  result.outcome.certificate.reset();
  return result;
}

}  // namespace polydiv
