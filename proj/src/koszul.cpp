#include <algorithm>

#include "polydiv/error.hpp"
#include "polydiv/membership.hpp"

namespace polydiv {

namespace {

void subsets_rec(std::size_t m, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < m; ++i) {
    cur.push_back(i);
    subsets_rec(m, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Strictly increasing index sets of size k, lexicographic.
std::vector<std::vector<std::size_t>> subsets(std::size_t m, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  if (k <= m) subsets_rec(m, k, 0, cur, out);
  return out;
}

int budget_of(const GeneratorSystem& g, int r, const std::vector<std::size_t>& set) {
  int b = r;
  for (std::size_t j : set) b -= static_cast<int>(g.degree(j));
  return b;
}

void check_index_set(const GeneratorSystem& g, const std::vector<std::size_t>& set, std::size_t size) {
  if (set.size() != size) throw DimensionError("Koszul component has the wrong index-set size");
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] >= g.m()) throw DimensionError("Koszul index out of range");
    if (i > 0 && set[i] <= set[i - 1]) throw Error("Koszul index sets must be strictly increasing");
  }
}

}  // namespace

KoszulTuple koszul_apply(const GeneratorSystem& g, const KoszulTuple& psi) {
  if (psi.ell == 0) throw Error("δ_f is not defined on Λ^0");
  KoszulTuple out;
  out.ell = psi.ell - 1;
  out.r = psi.r;
  for (const auto& [set, poly] : psi.components) {
    check_index_set(g, set, psi.ell);
    for (std::size_t p = 0; p < set.size(); ++p) {
      std::vector<std::size_t> rest = set;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
      Polynomial term = g.poly(set[p]) * poly;
      if (p % 2 == 1) term = -term;
      auto [it, inserted] = out.components.try_emplace(rest, Polynomial(g.n()));
      it->second += term;
    }
  }
  std::erase_if(out.components, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

KoszulOutcome koszul_divide(const GeneratorSystem& g, const KoszulTuple& phi) {
  if (phi.ell >= g.m()) throw Error("ell must be smaller than the number of generators");
  if (phi.r < 0) throw DegreeError("degree budget must be non-negative");
  for (const auto& [set, poly] : phi.components) {
    check_index_set(g, set, phi.ell);
    if (poly.nvars() != g.n()) throw DimensionError("Koszul component has the wrong number of variables");
    if (poly.degree() > budget_of(g, phi.r, set))
      throw DegreeError("Koszul component exceeds its degree budget r - Σ d_J");
  }

  // Rows: (J, μ) with |J| = ell and deg μ <= r - Σ_J d.
  const auto row_sets = subsets(g.m(), phi.ell);
  std::vector<std::pair<std::size_t, Monomial>> rows;
  std::map<std::vector<std::size_t>, std::size_t> row_set_index;
  std::vector<std::size_t> row_offset;
  for (std::size_t s = 0; s < row_sets.size(); ++s) {
    row_set_index[row_sets[s]] = s;
    row_offset.push_back(rows.size());
    for (auto& mu : monomials_up_to(g.n(), budget_of(g, phi.r, row_sets[s])))
      rows.emplace_back(s, std::move(mu));
  }
  auto find_row = [&](std::size_t s, const Monomial& mu) {
    const std::size_t begin = row_offset[s];
    const std::size_t end = s + 1 < row_offset.size() ? row_offset[s + 1] : rows.size();
    auto it = std::lower_bound(rows.begin() + static_cast<std::ptrdiff_t>(begin),
                               rows.begin() + static_cast<std::ptrdiff_t>(end), mu,
                               [](const auto& a, const Monomial& b) { return grevlex_less(a.second, b); });
    return static_cast<std::size_t>(it - rows.begin());
  };

  // Columns: (J', κ) with |J'| = ell + 1 and deg κ <= r - Σ_{J'} d.
  const auto col_sets = subsets(g.m(), phi.ell + 1);
  std::vector<std::pair<std::size_t, Monomial>> cols;
  for (std::size_t s = 0; s < col_sets.size(); ++s)
    for (auto& kappa : monomials_up_to(g.n(), budget_of(g, phi.r, col_sets[s])))
      cols.emplace_back(s, std::move(kappa));

  ExactMatrix a(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto& set = col_sets[cols[c].first];
    for (std::size_t p = 0; p < set.size(); ++p) {
      std::vector<std::size_t> rest = set;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
      const std::size_t s = row_set_index.at(rest);
      for (const auto& [mono, coeff] : g.poly(set[p]).terms()) {
        const std::size_t row = find_row(s, mono * cols[c].second);
        if (p % 2 == 1)
          a(row, c) -= coeff;
        else
          a(row, c) += coeff;
      }
    }
  }

  std::vector<Rational> rhs(rows.size());
  for (const auto& [set, poly] : phi.components) {
    const std::size_t s = row_set_index.at(set);
    for (const auto& [mono, coeff] : poly.terms()) rhs[find_row(s, mono)] = coeff;
  }

  KoszulOutcome out;
  const SolveOutcome sol = solve(a, rhs);
  if (!sol.solved()) {
    const auto& [s, mu] = rows[*sol.witness_row];
    out.witness = std::make_pair(row_sets[s], mu);
    return out;
  }
  KoszulTuple psi;
  psi.ell = phi.ell + 1;
  psi.r = phi.r;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (sgn(sol.solution[c]) == 0) continue;
    auto [it, inserted] = psi.components.try_emplace(col_sets[cols[c].first], Polynomial(g.n()));
    it->second.add_term(cols[c].second, sol.solution[c]);
  }
  KoszulTuple expected = phi;
  std::erase_if(expected.components, [](const auto& kv) { return kv.second.is_zero(); });
  if (koszul_apply(g, psi).components != expected.components)
    throw Error("internal error: Koszul solution fails recomputation");
  out.psi = std::move(psi);
  return out;
}

}  // namespace polydiv
