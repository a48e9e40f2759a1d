#include <algorithm>
#include <unordered_map>

#include "polydiv/error.hpp"
#include "polydiv/membership.hpp"

namespace polydiv {

std::size_t MacaulaySystem::row_index(const Monomial& m) const {
  auto it = std::lower_bound(rows.begin(), rows.end(), m, GrevlexLess{});
  if (it == rows.end() || !(*it == m)) throw DegreeError("monomial lies outside the degree budget");
  return static_cast<std::size_t>(it - rows.begin());
}

MacaulaySystem build_macaulay(const GeneratorSystem& g, int r) {
  if (r < 0) throw DegreeError("degree budget must be non-negative");
  MacaulaySystem sys;
  sys.r = r;
  sys.rows = monomials_up_to(g.n(), r);
  for (std::size_t j = 0; j < g.m(); ++j) {
    for (auto& kappa : monomials_up_to(g.n(), r - static_cast<int>(g.degree(j))))
      sys.cols.emplace_back(j, std::move(kappa));
  }
  sys.matrix = ExactMatrix(sys.rows.size(), sys.cols.size());
  for (std::size_t c = 0; c < sys.cols.size(); ++c) {
    const auto& [j, kappa] = sys.cols[c];
    for (const auto& [mono, coeff] : g.poly(j).terms())
      sys.matrix(sys.row_index(mono * kappa), c) = coeff;
  }
  return sys;
}

}  // namespace polydiv
