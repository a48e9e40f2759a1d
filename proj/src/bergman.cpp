#include <cmath>
#include <numbers>

#include "polydiv/error.hpp"
#include "polydiv/kernel.hpp"

namespace polydiv {

namespace {
double binomial(unsigned n, unsigned k) {
  double out = 1.0;
  for (unsigned i = 1; i <= k; ++i) out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
  return out;
}
}  // namespace

AlphaKernel make_alpha_kernel(const FormLayout& layout, std::span<const Complex> zeta,
                              std::span<const Complex> z) {
  const std::size_t n = layout.n();
  if (zeta.size() != n || z.size() != n) throw DimensionError("point dimension does not match the layout");
  double q = 1.0;
  Complex pairing = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    q += std::norm(zeta[k]);
    pairing += z[k] * std::conj(zeta[k]);
  }
  const Complex c = -1.0 / (2.0 * std::numbers::pi * Complex(0.0, 1.0));
  FormElement alpha1(layout);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      // (q δ_kl − conj(ζ_k) ζ_l)/q², with the diagonal numerator summed
      // directly to avoid cancellation far out in the chart.
      Complex g;
      if (k == l) {
        double num = 1.0;
        for (std::size_t i = 0; i < n; ++i)
          if (i != k) num += std::norm(zeta[i]);
        g = num / (q * q);
      } else {
        g = -std::conj(zeta[k]) * zeta[l] / (q * q);
      }
      alpha1 += exterior_product(FormElement::generator(layout, layout.dzbar(l), c * g),
                                 FormElement::generator(layout, layout.dz(k)));
    }
  }
  return {pairing / q, std::move(alpha1)};
}

std::vector<Complex> bergman_reproduce(const Polynomial& phi, int r, const std::vector<std::vector<Complex>>& points,
                                       const QuadratureRule& rule) {
  const std::size_t n = rule.n();
  if (phi.nvars() != n) throw DimensionError("Bergman reproduction: dimension mismatch");
  for (const auto& z : points)
    if (z.size() != n) throw DimensionError("Bergman reproduction: dimension mismatch");
  if (r < phi.degree()) throw DegreeError("r must be at least deg Φ");
  const ComplexPolynomial f(phi);
  const double coeff = binomial(static_cast<unsigned>(n + r), static_cast<unsigned>(n));
  std::vector<PairwiseSum<Complex>> sums(points.size());
  rule.for_each([&](const QuadratureNode& node) {
    const auto zeta = node.point();
    double q = 1.0;
    for (std::size_t k = 0; k < n; ++k) q += std::norm(zeta[k]);
    const Complex weighted = node.weight * f(zeta);
    for (std::size_t p = 0; p < points.size(); ++p) {
      Complex pairing = 1.0;
      for (std::size_t k = 0; k < n; ++k) pairing += points[p][k] * std::conj(zeta[k]);
      sums[p].add(weighted * std::pow(pairing / q, r));
    }
  });
  std::vector<Complex> out;
  for (const auto& s : sums) out.push_back(coeff * s.total());
  return out;
}

Complex bergman_reproduce(const Polynomial& phi, int r, std::span<const Complex> z, const QuadratureRule& rule) {
  return bergman_reproduce(phi, r, std::vector<std::vector<Complex>>{{z.begin(), z.end()}}, rule).front();
}

}  // namespace polydiv
