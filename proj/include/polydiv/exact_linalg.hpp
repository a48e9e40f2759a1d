#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "polydiv/polynomial.hpp"

namespace polydiv {

/// Dense row-major matrix of rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t k);
  static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Rational> multiply(std::span<const Rational> x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

enum class SolveStatus { Solved, Inconsistent };

struct SolveOutcome {
  SolveStatus status = SolveStatus::Inconsistent;
  /// Present iff Solved. Free coordinates are zero.
  std::vector<Rational> solution;
  /// Pivot columns of A, ascending.
  std::vector<std::size_t> pivot_columns;
  /// Original index of a row that reduces to 0 = nonzero (Inconsistent only).
  std::optional<std::size_t> witness_row;

  bool solved() const noexcept { return status == SolveStatus::Solved; }
};

/// Exact solution of A x = b; pivots are taken left to right so the
/// returned solution is the one with every free variable set to zero.
SolveOutcome solve(const ExactMatrix& a, std::span<const Rational> b);

std::size_t rank(const ExactMatrix& a);

/// Basis of the kernel; vector k has a 1 in the k-th free column and 0 in
/// every other free column.
std::vector<std::vector<Rational>> nullspace_basis(const ExactMatrix& a);

/// Row echelon form produced by fraction-free (Bareiss) elimination of an
/// integer matrix.
struct EchelonForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> data;              // row-major, reduced
  std::vector<std::size_t> pivot_columns;   // pivot of row i is pivot_columns[i]
  std::vector<std::size_t> row_order;       // original row index of each reduced row
  std::vector<mpz_class> pivots;            // pivot values in elimination order
  bool divisions_exact = true;              // only meaningful when checked

  const mpz_class& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Bareiss elimination. Columns at index >= pivot_limit are carried along but
/// never chosen as pivots (used for augmented right-hand sides). With
/// check_divisions set, every exact division is tested and the outcome is
/// recorded in divisions_exact.
EchelonForm bareiss_echelon(std::size_t rows, std::size_t cols, std::vector<mpz_class> data,
                            std::size_t pivot_limit, bool check_divisions = false);

}  // namespace polydiv
