#include "polydiv/exact_linalg.hpp"

#include <algorithm>
#include <utility>

#include "polydiv/error.hpp"

namespace polydiv {

ExactMatrix ExactMatrix::identity(std::size_t k) {
  ExactMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Rational> ExactMatrix::multiply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector dimension mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0 && sgn(x[j]) != 0) out[i] += (*this)(i, j) * x[j];
  return out;
}

EchelonForm bareiss_echelon(std::size_t rows, std::size_t cols, std::vector<mpz_class> data,
                            std::size_t pivot_limit, bool check_divisions) {
  if (data.size() != rows * cols) throw DimensionError("echelon input has the wrong size");
  EchelonForm ef;
  ef.rows = rows;
  ef.cols = cols;
  ef.data = std::move(data);
  ef.row_order.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) ef.row_order[i] = i;

  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return ef.data[i * cols + j]; };
  auto divexact = [&](mpz_class& dst, const mpz_class& num, const mpz_class& den) {
    if (check_divisions && !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
      ef.divisions_exact = false;
    mpz_divexact(dst.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  };

  mpz_class prev = 1;
  mpz_class tmp;
  std::vector<std::size_t> nz;
  std::size_t k = 0;
  const std::size_t limit = std::min(pivot_limit, cols);
  for (std::size_t c = 0; c < limit && k < rows; ++c) {
    std::size_t piv = k;
    while (piv < rows && sgn(at(piv, c)) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != k) {
      std::swap_ranges(ef.data.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                       ef.data.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                       ef.data.begin() + static_cast<std::ptrdiff_t>(k * cols));
      std::swap(ef.row_order[piv], ef.row_order[k]);
    }
    const mpz_class p = at(k, c);
    nz.clear();
    for (std::size_t j = c + 1; j < cols; ++j)
      if (sgn(at(k, j)) != 0) nz.push_back(j);
    const bool unit_step = (p == prev);

    for (std::size_t i = k + 1; i < rows; ++i) {
      const mpz_class aic = at(i, c);
      if (sgn(aic) == 0) {
        if (unit_step) continue;
        for (std::size_t j = c + 1; j < cols; ++j) {
          mpz_class& a = at(i, j);
          if (sgn(a) == 0) continue;
          tmp = a * p;
          divexact(a, tmp, prev);
        }
        continue;
      }
      if (unit_step) {
        // (p a - aic b)/prev with p == prev reduces to a - aic b / prev.
        for (std::size_t j : nz) {
          tmp = aic * at(k, j);
          divexact(tmp, tmp, prev);
          at(i, j) -= tmp;
        }
      } else {
        for (std::size_t j = c + 1; j < cols; ++j) {
          mpz_class& a = at(i, j);
          const mpz_class& b = at(k, j);
          if (sgn(a) == 0 && sgn(b) == 0) continue;
          tmp = p * a;
          tmp -= aic * b;
          divexact(a, tmp, prev);
        }
      }
      at(i, c) = 0;
    }
    ef.pivot_columns.push_back(c);
    ef.pivots.push_back(p);
    prev = p;
    ++k;
  }
  return ef;
}

namespace {

// Integer form of [A | b] with each row scaled by the lcm of its
// denominators; identically zero columns of A are dropped.
struct ClearedSystem {
  std::vector<std::size_t> kept;  // original column index of each kept column
  std::size_t rows = 0;
  std::size_t cols = 0;  // kept.size() + (has_rhs ? 1 : 0)
  std::vector<mpz_class> data;
};

ClearedSystem clear_denominators(const ExactMatrix& a, std::span<const Rational> b, bool has_rhs) {
  ClearedSystem cs;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (sgn(a(i, j)) != 0) {
        cs.kept.push_back(j);
        break;
      }
    }
  }
  cs.rows = a.rows();
  cs.cols = cs.kept.size() + (has_rhs ? 1 : 0);
  cs.data.resize(cs.rows * cs.cols);
  mpz_class l;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    l = 1;
    for (std::size_t j : cs.kept) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    if (has_rhs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b[i].get_den_mpz_t());
    for (std::size_t jj = 0; jj < cs.kept.size(); ++jj) {
      const Rational& q = a(i, cs.kept[jj]);
      if (sgn(q) == 0) continue;
      mpz_class& out = cs.data[i * cs.cols + jj];
      mpz_divexact(out.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
      out *= q.get_num();
    }
    if (has_rhs && sgn(b[i]) != 0) {
      mpz_class& out = cs.data[i * cs.cols + cs.kept.size()];
      mpz_divexact(out.get_mpz_t(), l.get_mpz_t(), b[i].get_den_mpz_t());
      out *= b[i].get_num();
    }
  }
  return cs;
}

// Back-substitution over the pivot rows; rhs(i) supplies the right-hand side
// of reduced row i, and x holds already-fixed values for free columns.
template <class Rhs>
void back_substitute(const EchelonForm& ef, std::size_t ncols, Rhs rhs, std::vector<Rational>& x) {
  for (std::size_t i = ef.pivot_columns.size(); i-- > 0;) {
    const std::size_t pc = ef.pivot_columns[i];
    Rational acc = rhs(i);
    for (std::size_t j = pc + 1; j < ncols; ++j) {
      const mpz_class& a = ef.at(i, j);
      if (sgn(a) == 0 || sgn(x[j]) == 0) continue;
      acc -= Rational(a) * x[j];
    }
    x[pc] = acc / Rational(ef.at(i, pc));
  }
}

}  // namespace

SolveOutcome solve(const ExactMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows())
    throw DimensionError("right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                         std::to_string(a.rows()) + " rows");
  ClearedSystem cs = clear_denominators(a, b, true);
  const std::size_t nk = cs.kept.size();
  EchelonForm ef = bareiss_echelon(cs.rows, cs.cols, std::move(cs.data), nk);

  SolveOutcome out;
  for (std::size_t pc : ef.pivot_columns) out.pivot_columns.push_back(cs.kept[pc]);
  for (std::size_t i = ef.pivot_columns.size(); i < ef.rows; ++i) {
    if (sgn(ef.at(i, nk)) != 0) {
      out.status = SolveStatus::Inconsistent;
      out.witness_row = ef.row_order[i];
      return out;
    }
  }
  std::vector<Rational> xk(nk);
  back_substitute(ef, nk, [&](std::size_t i) { return Rational(ef.at(i, nk)); }, xk);
  out.status = SolveStatus::Solved;
  out.solution.assign(a.cols(), Rational(0));
  for (std::size_t jj = 0; jj < nk; ++jj) out.solution[cs.kept[jj]] = xk[jj];
  return out;
}

std::size_t rank(const ExactMatrix& a) {
  ClearedSystem cs = clear_denominators(a, {}, false);
  return bareiss_echelon(cs.rows, cs.cols, std::move(cs.data), cs.cols).pivot_columns.size();
}

std::vector<std::vector<Rational>> nullspace_basis(const ExactMatrix& a) {
  ClearedSystem cs = clear_denominators(a, {}, false);
  const std::size_t nk = cs.kept.size();
  EchelonForm ef = bareiss_echelon(cs.rows, cs.cols, std::move(cs.data), nk);

  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t pc : ef.pivot_columns) is_pivot[cs.kept[pc]] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(a.cols());
    v[f] = 1;
    auto it = std::find(cs.kept.begin(), cs.kept.end(), f);
    if (it != cs.kept.end()) {
      const std::size_t fk = static_cast<std::size_t>(it - cs.kept.begin());
      std::vector<Rational> xk(nk);
      xk[fk] = 1;
      back_substitute(ef, nk, [](std::size_t) { return Rational(0); }, xk);
      for (std::size_t jj = 0; jj < nk; ++jj) v[cs.kept[jj]] = xk[jj];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace polydiv
