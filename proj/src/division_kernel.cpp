#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include <Eigen/Dense>

#include "polydiv/error.hpp"
#include "polydiv/kernel.hpp"

namespace polydiv {

namespace {

double binomial(unsigned n, unsigned k) {
  double out = 1.0;
  for (unsigned i = 1; i <= k; ++i) out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
  return out;
}

// Values and first derivatives of the generators at one chart point.
struct GeneratorJet {
  std::vector<ComplexPolynomial> value;
  std::vector<std::vector<ComplexPolynomial>> grad;  // grad[j][l]

  explicit GeneratorJet(const GeneratorSystem& g) {
    for (std::size_t j = 0; j < g.m(); ++j) {
      value.emplace_back(g.poly(j));
      grad.emplace_back();
      for (std::size_t l = 0; l < g.n(); ++l) grad.back().emplace_back(derivative(g.poly(j), l));
    }
  }
};

FormElement assemble_u_impl(const GeneratorSystem& g, const GeneratorJet& jet, const FormLayout& layout,
                            std::span<const Complex> zeta, double norm_floor) {
  const std::size_t n = g.n(), m = g.m();
  if (zeta.size() != n) throw DimensionError("chart point has the wrong dimension");
  double q = 1.0;
  for (const auto& c : zeta) q += std::norm(c);

  FormElement s(layout), ds(layout);
  double norm = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double qd = std::pow(q, g.degree(j));
    const Complex fj = jet.value[j](zeta);
    const Complex sj = std::conj(fj) / qd;
    norm += std::norm(fj) / qd;
    s += FormElement::generator(layout, layout.eps(j), sj);
    for (std::size_t l = 0; l < n; ++l) {
      const Complex dsj = std::conj(jet.grad[j][l](zeta)) / qd -
                          static_cast<double>(g.degree(j)) * std::conj(fj) * zeta[l] / (qd * q);
      ds += exterior_product(FormElement::generator(layout, layout.dzbar(l), dsj),
                             FormElement::generator(layout, layout.eps(j)));
    }
  }
  if (!(norm >= norm_floor)) throw NumericalError("generators (nearly) vanish at a quadrature node");

  FormElement u(layout);
  FormElement term = s;
  double scale = 1.0 / norm;
  const std::size_t top = std::min(m, n + 1);
  for (std::size_t k = 1; k <= top; ++k) {
    u += term * scale;
    term = exterior_product(term, ds);
    scale /= norm;
  }
  return u;
}

// Sample points for fitting a polynomial of total degree <= degree.
std::vector<std::vector<Complex>> sample_points(std::size_t n, int degree, unsigned oversample) {
  std::vector<std::vector<Complex>> pts;
  const auto root = [](std::size_t k, std::size_t count) {
    return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count));
  };
  if (n == 1) {
    const std::size_t count = static_cast<std::size_t>(oversample) * static_cast<std::size_t>(degree + 1);
    for (std::size_t k = 0; k < count; ++k) pts.push_back({root(k, count)});
  } else {
    // A K×K grid of roots of unity interpolates every monomial of degree < K
    // in each variable; K = degree + oversample keeps it overdetermined.
    const std::size_t count = static_cast<std::size_t>(degree) + std::max(2u, oversample);
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = 0; b < count; ++b) pts.push_back({root(a, count), root(b, count)});
  }
  return pts;
}

}  // namespace

FormElement assemble_u(const GeneratorSystem& g, std::span<const Complex> zeta, double norm_floor) {
  return assemble_u_impl(g, GeneratorJet(g), FormLayout(g.n(), g.m()), zeta, norm_floor);
}

Complex delta_f_scalar(const GeneratorSystem& g, std::span<const Complex> zeta, const FormElement& u) {
  Complex out = 0.0;
  for (std::size_t j = 0; j < g.m(); ++j)
    out += evaluate(g.poly(j), zeta) * u.contract(u.layout().eps(j)).scalar_part();
  return out;
}

KernelDivision kernel_divide(const GeneratorSystem& g, const Polynomial& phi, int r, const QuadratureRule& rule,
                             const KernelDivideOptions& options) {
  const std::size_t n = g.n(), m = g.m();
  if (m < 2) throw DimensionError("the division formula needs at least two generators");
  if (n != 1 && n != 2) throw DimensionError("the division formula is available for n = 1 and n = 2 only");
  if (rule.n() != n || phi.nvars() != n) throw DimensionError("quadrature rule and target must live in C^n");
  if (r < phi.degree()) throw DegreeError("r must be at least deg Φ");

  KernelDivision out;
  std::vector<unsigned> sorted = g.degrees();
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const std::size_t mu = std::min(n, m - 1);
  out.degree_bound = r;
  for (std::size_t i = 0; i <= mu; ++i) out.degree_bound += static_cast<int>(sorted[i]);
  int max_cap = 0;
  for (std::size_t j = 0; j < m; ++j) {
    out.degree_caps.push_back(out.degree_bound - static_cast<int>(g.degree(j)));
    max_cap = std::max(max_cap, out.degree_caps.back());
  }

  const auto samples = sample_points(n, max_cap, options.oversample);
  out.samples = samples.size();

  const FormLayout layout(n, m);
  const GeneratorJet jet(g);
  const ComplexPolynomial target(phi);
  std::vector<std::vector<ComplexPolynomial>> hefer(m);
  for (std::size_t j = 0; j < m; ++j)
    for (const auto& h : hefer_decompose(g.poly(j), g.degree(j), j).forms) hefer[j].emplace_back(h);

  const Complex c = -1.0 / (2.0 * std::numbers::pi * Complex(0.0, 1.0));
  FormElement tau(layout);
  for (std::size_t j = 0; j < m; ++j) {
    const auto star = FormElement::generator(layout, layout.eps_star(j));
    tau += exterior_product(star, FormElement::generator(layout, layout.eps(j)) -
                                      FormElement::generator(layout, layout.eps_tilde(j)));
  }
  const unsigned power = static_cast<unsigned>(n) + static_cast<unsigned>(r);
  const FormElement exp_tau = tau.exp();

  std::vector<std::vector<PairwiseSum<Complex>>> acc(samples.size(), std::vector<PairwiseSum<Complex>>(m));
  std::vector<Complex> joint(2 * n);
  rule.for_each([&](const QuadratureNode& node) {
    const auto zeta = node.point();
    const FormElement u = assemble_u_impl(g, jet, layout, zeta, options.norm_floor);
    const Complex phi_val = target(zeta) * node.weight;
    // α1 does not depend on z'; its powers are shared by every sample.
    const AlphaKernel base = make_alpha_kernel(layout, zeta, zeta);
    std::vector<FormElement> alpha1_pow;
    alpha1_pow.push_back(FormElement::scalar(layout, 1.0));
    for (std::size_t a = 1; a <= n; ++a) alpha1_pow.push_back(exterior_product(alpha1_pow.back(), base.alpha1));
    const Complex volume = alpha1_pow[n].top_coefficient();

    for (std::size_t k = 0; k < n; ++k) joint[k] = zeta[k];
    for (std::size_t si = 0; si < samples.size(); ++si) {
      const auto& z = samples[si];
      for (std::size_t k = 0; k < n; ++k) joint[n + k] = z[k];
      FormElement h(layout);
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < n; ++k)
          h += exterior_product(FormElement::generator(layout, layout.dz(k), c * hefer[j][k](joint)),
                                FormElement::generator(layout, layout.eps_star(j)));
      // τ and H are even, so exp(τ + H) = exp(τ)∧exp(H).
      const FormElement eu = exterior_product(exp_tau, exterior_product(h.exp(), u));

      double q = 1.0;
      Complex pairing = 1.0;
      for (std::size_t k = 0; k < n; ++k) {
        q += std::norm(zeta[k]);
        pairing += z[k] * std::conj(zeta[k]);
      }
      const Complex alpha0 = pairing / q;
      FormElement alpha_power(layout);
      for (unsigned a = 0; a <= n && a <= power; ++a)
        alpha_power += alpha1_pow[a] * (binomial(power, a) * std::pow(alpha0, static_cast<int>(power - a)));

      for (std::size_t j = 0; j < m; ++j) {
        const FormElement y = eu.contract(layout.eps_tilde(j)).drop(layout.tilde_mask()).epsilon_integral();
        const Complex top = exterior_product(y, alpha_power).top_coefficient();
        acc[si][j].add(top / volume * phi_val);
      }
    }
  });

  for (std::size_t j = 0; j < m; ++j) {
    const auto monos = monomials_up_to(n, out.degree_caps[j]);
    Eigen::MatrixXcd v(samples.size(), monos.size());
    Eigen::VectorXcd y(samples.size());
    for (std::size_t si = 0; si < samples.size(); ++si) {
      y(static_cast<Eigen::Index>(si)) = acc[si][j].total();
      for (std::size_t c2 = 0; c2 < monos.size(); ++c2) {
        Complex val = 1.0;
        for (std::size_t k = 0; k < n; ++k) val *= std::pow(samples[si][k], static_cast<int>(monos[c2].exponents()[k]));
        v(static_cast<Eigen::Index>(si), static_cast<Eigen::Index>(c2)) = val;
      }
    }
    const Eigen::VectorXcd coef = v.colPivHouseholderQr().solve(y);
    const double residual = (v * coef - y).norm() / std::max(y.norm(), 1.0);
    out.fit_residual = std::max(out.fit_residual, residual);
    if (residual > options.fit_tolerance) throw NumericalError("cofactor fit residual above tolerance");
    ComplexPolynomial qj(n);
    for (std::size_t c2 = 0; c2 < monos.size(); ++c2) qj.add_term(monos[c2], coef(static_cast<Eigen::Index>(c2)));
    out.cofactors.push_back(std::move(qj));
  }
  return out;
}

double exact_subspace_distance(const GeneratorSystem& g, const Polynomial& phi, int budget,
                               const std::vector<ComplexPolynomial>& q) {
  if (q.size() != g.m()) throw DimensionError("one cofactor per generator is required");
  const MacaulaySystem sys = build_macaulay(g, budget);
  std::vector<Rational> rhs(sys.rows.size());
  for (const auto& [mono, c] : phi.terms()) {
    if (static_cast<int>(mono.degree()) > budget) throw DegreeError("target exceeds the budget");
    rhs[sys.row_index(mono)] = c;
  }
  const SolveOutcome particular = solve(sys.matrix, rhs);
  if (!particular.solved()) throw Error("target is not in the ideal at this budget");
  const auto kernel = nullspace_basis(sys.matrix);

  const auto cols = static_cast<Eigen::Index>(sys.cols.size());
  Eigen::VectorXcd diff(cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    const auto& [j, mono] = sys.cols[static_cast<std::size_t>(c)];
    Complex coeff = 0.0;
    for (const auto& t : q[j].terms())
      if (t.monomial == mono) coeff += t.coefficient;
    diff(c) = coeff - particular.solution[static_cast<std::size_t>(c)].get_d();
  }
  // Any coefficient of q outside the column set is part of the distance.
  double outside = 0.0;
  for (std::size_t j = 0; j < q.size(); ++j)
    for (const auto& t : q[j].terms())
      if (static_cast<int>(t.monomial.degree()) > budget - static_cast<int>(g.degree(j)))
        outside += std::norm(t.coefficient);
  if (kernel.empty()) return std::sqrt(diff.squaredNorm() + outside);

  Eigen::MatrixXcd basis(cols, static_cast<Eigen::Index>(kernel.size()));
  for (std::size_t k = 0; k < kernel.size(); ++k)
    for (Eigen::Index c = 0; c < cols; ++c)
      basis(c, static_cast<Eigen::Index>(k)) = kernel[k][static_cast<std::size_t>(c)].get_d();
  const Eigen::VectorXcd t = basis.colPivHouseholderQr().solve(diff);
  return std::sqrt((diff - basis * t).squaredNorm() + outside);
}

}  // namespace polydiv
