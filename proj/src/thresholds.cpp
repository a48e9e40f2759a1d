#include <algorithm>
#include <functional>
#include <numeric>

#include "polydiv/error.hpp"
#include "polydiv/membership.hpp"

namespace polydiv {

namespace {

// Σ of the k largest entries minus n; requires k <= degrees.size().
int top_sum_minus_n(std::vector<unsigned>& degrees, std::size_t k, std::size_t n) {
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  const long sum = std::accumulate(degrees.begin(), degrees.begin() + static_cast<std::ptrdiff_t>(k), 0L);
  return static_cast<int>(sum - static_cast<long>(n));
}

}  // namespace

Threshold noll_threshold(std::vector<unsigned> degrees, std::size_t n, unsigned ell) {
  if (degrees.empty()) throw Error("degree list must be nonempty");
  if (std::any_of(degrees.begin(), degrees.end(), [](unsigned d) { return d < 1; }))
    throw DegreeError("degrees must be at least 1");
  Threshold t;
  const std::size_t m = degrees.size();
  // m - ell <= n also covers ell >= m, where the degree sum is undefined.
  if (m <= n + ell) {
    t.auto_satisfied = true;
    return t;
  }
  t.minimal_r = std::max(0, top_sum_minus_n(degrees, n + ell + 1, n));
  return t;
}

PowerBudget skolk_oppo_budget(std::vector<unsigned> degrees, std::size_t n, std::size_t m,
                              int r_or_M, BudgetMode /*mode*/) {
  if (degrees.size() != m) throw DimensionError("degree list length differs from m");
  PowerBudget b;
  b.power = static_cast<unsigned>(std::min(m, n));
  b.degree_budget = r_or_M * static_cast<int>(b.power);
  if (m <= n) {
    b.condition_ok = true;
  } else {
    b.condition_ok = b.degree_budget >= top_sum_minus_n(degrees, n + 1, n);
  }
  return b;
}

}  // namespace polydiv
