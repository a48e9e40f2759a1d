#include "polydiv/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "polydiv/error.hpp"

namespace polydiv {

Monomial Monomial::unit(std::size_t nvars, std::size_t var, Exponent power) {
  if (var >= nvars) throw DimensionError("variable index out of range");
  Monomial m(nvars);
  m.exps_[var] = power;
  return m;
}

unsigned Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool Monomial::divides(const Monomial& other) const {
  if (other.nvars() != nvars()) throw DimensionError("monomial variable counts differ");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.nvars() != nvars()) throw DimensionError("monomial variable counts differ");
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw Error("monomial quotient is not exact");
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= divisor.exps_[i];
  return out;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db;
  // Equal degree: a < b iff the last nonzero entry of a - b is positive.
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

namespace {

void fill_degree(std::size_t var, unsigned remaining, std::vector<Monomial::Exponent>& cur,
                 std::vector<Monomial>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    cur[var] = e;
    fill_degree(var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<Monomial::Exponent> cur(nvars, 0);
  fill_degree(0, degree, cur, out);
  std::sort(out.begin(), out.end(), GrevlexLess{});
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= degree; ++d) {
    auto block = monomials_of_degree(nvars, static_cast<unsigned>(d));
    out.insert(out.end(), std::make_move_iterator(block.begin()),
               std::make_move_iterator(block.end()));
  }
  return out;
}

std::size_t count_monomials_up_to(std::size_t nvars, int degree) {
  if (degree < 0) return 0;
  // C(nvars + degree, nvars), computed incrementally to stay exact.
  std::size_t c = 1;
  for (std::size_t i = 1; i <= nvars; ++i) c = c * (static_cast<std::size_t>(degree) + i) / i;
  return c;
}

}  // namespace polydiv
