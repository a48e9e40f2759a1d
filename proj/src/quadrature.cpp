#include "polydiv/quadrature.hpp"

#include <cmath>
#include <numbers>

#include <gsl/gsl_integration.h>

#include "polydiv/error.hpp"

namespace polydiv {

QuadratureRule::QuadratureRule(std::size_t n, std::size_t resolution) : n_(n), res_(resolution) {
  if (n != 1 && n != 2) throw DimensionError("quadrature is available for n = 1 and n = 2 only");
  if (resolution == 0) throw DimensionError("quadrature resolution must be positive");
  gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(resolution);
  if (table == nullptr) throw Error("cannot build Gauss-Legendre table");
  gl_nodes_.resize(resolution);
  gl_weights_.resize(resolution);
  for (std::size_t i = 0; i < resolution; ++i)
    gsl_integration_glfixed_point(0.0, std::numbers::pi / 2, i, &gl_nodes_[i], &gl_weights_[i], table);
  gsl_integration_glfixed_table_free(table);
  phases_.resize(resolution);
  for (std::size_t k = 0; k < resolution; ++k)
    phases_[k] = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(resolution));
}

std::size_t QuadratureRule::size() const noexcept {
  return n_ == 1 ? res_ * res_ : res_ * res_ * res_ * res_;
}

QuadratureNode QuadratureRule::node(std::size_t i) const {
  using std::numbers::pi;
  QuadratureNode out;
  out.n = n_;
  const double dphi = 2 * pi / static_cast<double>(res_);
  const std::size_t it = i % res_;
  i /= res_;
  const double theta = gl_nodes_[it];
  const double radius = std::tan(theta);
  const double st = std::sin(theta), ct = std::cos(theta);
  if (n_ == 1) {
    const std::size_t ip = i;
    out.coords[0] = radius * phases_[ip];
    out.weight = (1.0 / pi) * st * ct * gl_weights_[it] * dphi;
    return out;
  }
  const std::size_t is = i % res_;
  i /= res_;
  const std::size_t ip1 = i % res_;
  const std::size_t ip2 = i / res_;
  const double psi = gl_nodes_[is];
  const double cp = std::cos(psi), sp = std::sin(psi);
  out.coords[0] = radius * cp * phases_[ip1];
  out.coords[1] = radius * sp * phases_[ip2];
  out.weight = (2.0 / (pi * pi)) * st * st * st * ct * cp * sp * gl_weights_[it] * gl_weights_[is] * dphi * dphi;
  return out;
}

QuadratureRule fs_quadrature(std::size_t n, std::size_t resolution) { return QuadratureRule(n, resolution); }

}  // namespace polydiv
