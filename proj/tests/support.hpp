#pragma once

// Hand-rolled generators for the property suites. Fixed seeds keep every
// run identical.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "polydiv/polynomial.hpp"

namespace polydiv::testing {

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, long num = 9, long den = 4) {
  Rational q(uniform_int(rng, -num, num), uniform_int(rng, 1, den));
  q.canonicalize();
  return q;
}

inline Rational random_nonzero_rational(Rng& rng, long num = 9, long den = 4) {
  Rational q;
  do q = random_rational(rng, num, den);
  while (q == 0);
  return q;
}

inline Monomial random_monomial(Rng& rng, std::size_t nvars, int max_degree) {
  std::vector<std::uint32_t> e(nvars, 0);
  const long deg = uniform_int(rng, 0, max_degree);
  for (long i = 0; i < deg; ++i) ++e[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(nvars) - 1))];
  return Monomial(std::move(e));
}

inline Polynomial random_poly(Rng& rng, std::size_t nvars, int max_degree, int max_terms = 5) {
  Polynomial p(nvars);
  const long terms = uniform_int(rng, 0, max_terms);
  for (long t = 0; t < terms; ++t) p.add_term(random_monomial(rng, nvars, max_degree), random_rational(rng));
  return p;
}

inline Polynomial random_nonzero_poly(Rng& rng, std::size_t nvars, int max_degree, int max_terms = 5) {
  Polynomial p(nvars);
  while (p.is_zero()) p = random_poly(rng, nvars, max_degree, max_terms);
  return p;
}

inline std::vector<Rational> random_point(Rng& rng, std::size_t n) {
  std::vector<Rational> pt;
  for (std::size_t i = 0; i < n; ++i) pt.push_back(random_rational(rng, 7, 5));
  return pt;
}

using Rows = std::vector<std::vector<Rational>>;

// Textbook Gauss-Jordan over Q, kept deliberately separate from the library.
struct NaiveReduction {
  std::size_t rank = 0;
  Rational det = 1;  // meaningful for square input
};

inline NaiveReduction naive_reduce(Rows a) {
  NaiveReduction out;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) {
      out.det = 0;
      continue;
    }
    if (p != r) {
      std::swap(a[p], a[r]);
      out.det = -out.det;
    }
    out.det *= a[r][c];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  out.rank = r;
  if (r < rows) out.det = 0;
  return out;
}

}  // namespace polydiv::testing
