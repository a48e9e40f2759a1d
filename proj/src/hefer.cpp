#include "polydiv/hefer.hpp"

#include "polydiv/error.hpp"

namespace polydiv {

namespace {

Polynomial embed(const Polynomial& f, std::size_t offset) {
  const std::size_t n = f.nvars();
  Polynomial out(2 * n);
  for (const auto& [mono, c] : f.terms()) {
    std::vector<std::uint32_t> e(2 * n, 0);
    for (std::size_t k = 0; k < n; ++k) e[offset + k] = mono.exponents()[k];
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

}  // namespace

Polynomial embed_zeta(const Polynomial& f) { return embed(f, 0); }
Polynomial embed_z(const Polynomial& f) { return embed(f, f.nvars()); }

HeferDecomposition hefer_decompose(const Polynomial& f, std::optional<unsigned> degree, std::size_t generator) {
  const std::size_t n = f.nvars();
  const int actual = f.degree();
  const unsigned d = degree.value_or(actual < 0 ? 0u : static_cast<unsigned>(actual));
  if (actual > static_cast<int>(d)) throw DegreeError("declared degree is below the polynomial degree");

  HeferDecomposition out;
  out.generator = generator;
  out.n = n;
  out.degree = d;
  out.forms.assign(n, Polynomial(2 * n));
  // Bracket k swaps ζ_k for z_k with z_1..z_{k-1} and ζ_{k+1}..ζ_n fixed;
  // (ζ^a − z^a)/(ζ − z) = Σ_i ζ^i z^{a-1-i}.
  for (const auto& [mono, c] : f.terms()) {
    const auto& a = mono.exponents();
    for (std::size_t k = 0; k < n; ++k) {
      if (a[k] == 0) continue;
      std::vector<std::uint32_t> base(2 * n, 0);
      for (std::size_t i = 0; i < k; ++i) base[n + i] = a[i];
      for (std::size_t i = k + 1; i < n; ++i) base[i] = a[i];
      for (std::uint32_t i = 0; i < a[k]; ++i) {
        std::vector<std::uint32_t> e = base;
        e[k] = i;
        e[n + k] = a[k] - 1 - i;
        out.forms[k].add_term(Monomial(std::move(e)), c);
      }
    }
  }
  return out;
}

bool verify_hefer(const Polynomial& f, const HeferDecomposition& h) {
  const std::size_t n = f.nvars();
  if (h.n != n || h.forms.size() != n) return false;
  const int bound = static_cast<int>(h.degree) - 1;
  if (f.degree() > static_cast<int>(h.degree)) return false;
  Polynomial lhs(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    const Polynomial& hk = h.forms[k];
    if (hk.nvars() != 2 * n) return false;
    if (hk.degree() > bound) return false;
    lhs += hk * (Polynomial::variable(2 * n, k) - Polynomial::variable(2 * n, n + k));
  }
  return lhs == embed_zeta(f) - embed_z(f);
}

}  // namespace polydiv
