// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria (0 when everything passes).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

#include "polydiv/error.hpp"
#include "polydiv/hefer.hpp"
#include "polydiv/kernel.hpp"
#include "polydiv/membership.hpp"
#include "polydiv/residue.hpp"
#include "support.hpp"

using namespace polydiv;
using namespace polydiv::testing;

namespace {

// Pinned tolerances and limits.
constexpr double kBergmanTol1 = 1e-8;      // n = 1, resolution 64
constexpr double kBergmanTol2 = 1e-6;      // n = 2, resolution 48
constexpr double kKernelResidualTol = 1e-4;
constexpr double kKernelDistanceTol = 1e-3;
constexpr double kKernelDegreeTol = 1e-9;  // coefficients below this count as zero for degree checks
constexpr std::size_t kKernelResolution = 64;

struct Failure {
  std::string detail;
};

void require(bool ok, const std::string& detail) {
  if (!ok) throw Failure{detail};
}

GeneratorSystem system_of(std::size_t n, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> polys;
  for (const char* g : gens) polys.push_back(parse(g, n));
  return GeneratorSystem(n, std::move(polys));
}

// --- 1 -------------------------------------------------------------------
void coordinate_power_sharpness() {
  for (auto [M, m, n] : {std::tuple<unsigned, unsigned, std::size_t>{1, 2, 2}, {2, 2, 2}, {1, 3, 3}}) {
    const unsigned a = M * m;
    std::vector<Polynomial> polys;
    std::vector<CoordinatePower> ci_gens;
    Polynomial sum(n);
    for (std::size_t k = 0; k < m; ++k) {
      polys.push_back(pow(Polynomial::variable(n, k), a));
      ci_gens.push_back({k, a});
      sum += Polynomial::variable(n, k);
    }
    const GeneratorSystem g(n, polys);
    const MonomialCI ci(n, ci_gens);
    const Polynomial phi = pow(sum, a);
    const int r = static_cast<int>(M * m * m);
    const std::string tag = "(M,m,n)=(" + std::to_string(M) + "," + std::to_string(m) + "," + std::to_string(n) + ")";

    const Polynomial top = pow(phi, m);
    const auto full = divide(g, top, r);
    require(full.feasible() && full.certificate->verified && verify(g, top, *full.certificate),
            tag + ": Φ^m not divided at r = Mm²");

    const Polynomial below = pow(phi, m - 1);
    for (int rr = 0; rr <= r + 4; ++rr) {
      bool rejected = false;
      try {
        rejected = !divide(g, below, rr).feasible();
      } catch (const DegreeError&) {
        rejected = true;  // budget below deg Φ^{m-1}
      }
      require(rejected, tag + ": Φ^{m-1} divided at r = " + std::to_string(rr));
    }
    require(annihilates(ci, top), tag + ": residue test rejects Φ^m");
    require(!annihilates(ci, below), tag + ": residue test accepts Φ^{m-1}");
  }
}

// --- 2 -------------------------------------------------------------------
void macaulay_bound() {
  const auto check = [](const GeneratorSystem& g, int r, bool expect) {
    const auto out = bezout(g, r);
    const bool ok = out.feasible() && verify(g, Polynomial::constant(g.n(), 1), *out.certificate);
    require(ok == expect, "bezout at r = " + std::to_string(r) + (expect ? " infeasible" : " feasible"));
  };
  const auto lin = system_of(2, {"z1", "z2", "1 - z1 - z2"});
  const auto quad = system_of(2, {"z1^2", "z2^2", "(1 - z1 - z2)^2"});
  const auto pair = system_of(1, {"z1^2", "(1 + z1)^2"});
  for (const auto* g : {&lin, &quad, &pair}) {
    const int sum = static_cast<int>(std::accumulate(g->degrees().begin(), g->degrees().end(), 0u));
    check(*g, sum - static_cast<int>(g->n()), true);
  }
  check(pair, 2, false);
}

// --- 3 -------------------------------------------------------------------
void noether() {
  Rng rng(3003);
  const auto g = system_of(2, {"z1", "z2"});
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial phi = random_nonzero_poly(rng, 2, 6, 8);
    phi.add_term(Monomial{0, 0}, -phi.coefficient(Monomial{0, 0}));
    if (phi.is_zero()) phi = parse("z1*z2^5", 2);
    const auto out = divide(g, phi, phi.degree());
    require(out.feasible() && verify(g, phi, *out.certificate), "Φ = " + to_string(phi));
  }
}

// --- 4 -------------------------------------------------------------------
void residue_oracle() {
  std::size_t cases = 0;
  const auto compare = [&cases](const MonomialCI& ci, const Polynomial& phi) {
    ++cases;
    require(annihilates(ci, phi) == duality_oracle(ci.as_generator_system(), phi), "disagreement at Φ = " + to_string(phi));
  };
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto targets = monomials_up_to(n, 6);
    for (unsigned subset = 1; subset < (1u << n); ++subset) {
      std::vector<std::size_t> vars;
      for (std::size_t k = 0; k < n; ++k)
        if (subset & (1u << k)) vars.push_back(k);
      std::size_t combos = 1;
      for (std::size_t i = 0; i < vars.size(); ++i) combos *= 3;
      for (std::size_t code = 0; code < combos; ++code) {
        std::vector<CoordinatePower> gens;
        std::size_t c = code;
        for (auto v : vars) {
          gens.push_back({v, static_cast<unsigned>(c % 3 + 1)});
          c /= 3;
        }
        const MonomialCI ci(n, gens);
        for (const auto& mono : targets) compare(ci, Polynomial::term(mono, 1));
      }
    }
  }
  Rng rng(4004);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    std::vector<CoordinatePower> gens;
    for (std::size_t k = 0; k < n; ++k)
      if (uniform_int(rng, 0, 2) > 0) gens.push_back({k, static_cast<unsigned>(uniform_int(rng, 1, 3))});
    if (gens.empty()) gens.push_back({0, static_cast<unsigned>(uniform_int(rng, 1, 3))});
    Polynomial phi(n);
    while (phi.size() < 2) {
      long coeff = 0;
      while (coeff == 0) coeff = uniform_int(rng, -2, 2);
      phi.add_term(random_monomial(rng, n, 6), coeff);
    }
    compare(MonomialCI(n, gens), phi);
  }
  require(cases > 5000, "sweep too small");
}

// --- 5 -------------------------------------------------------------------
void bergman() {
  const auto run = [](std::size_t n, std::size_t res, int r_max, double tol, const std::vector<const char*>& polys,
                      const std::vector<std::vector<Complex>>& points) {
    const auto rule = fs_quadrature(n, res);
    for (const char* text : polys) {
      const Polynomial phi = parse(text, n);
      for (int r = std::max(phi.degree(), 0); r <= r_max; ++r) {
        const auto values = bergman_reproduce(phi, r, points, rule);
        for (std::size_t p = 0; p < points.size(); ++p) {
          const double err = std::abs(values[p] - evaluate(phi, points[p]));
          require(err < tol, "n=" + std::to_string(n) + " Φ=" + text + " r=" + std::to_string(r) +
                                 " error " + std::to_string(err));
        }
      }
    }
  };
  run(1, 64, 3, kBergmanTol1, {"1", "z1", "1 - 2*z1 + z1^2", "z1^3 - 1/2*z1", "3*z1^2 + 2/7"},
      {{0.5}, {Complex(0.3, 0)}, {Complex(-1.2, 0.4)}, {Complex(0, 2)}, {Complex(0.7, -0.7)}});
  run(2, 48, 2, kBergmanTol2, {"1", "z1", "z1*z2 - z2^2 + 3", "z1^2 - 2*z2", "1/3*z2 + z1 - 1"},
      {{0.0, 0.0}, {0.5, Complex(0, -0.25)}, {Complex(-1, 0.5), 0.3}, {Complex(0.2, 0.2), Complex(1.5, 0)},
       {Complex(0, 1), Complex(0, -1)}});
}

// --- 6 -------------------------------------------------------------------
void division_formula() {
  const auto g = system_of(1, {"z1", "1 - z1"});
  const auto rule = fs_quadrature(1, kKernelResolution);
  for (auto [text, r] : {std::pair<const char*, int>{"1", 0}, {"z1", 1}}) {
    const Polynomial phi = parse(text, 1);
    const auto out = kernel_divide(g, phi, r, rule);
    const int bound = 1 + 1 + r;
    require(out.degree_bound == bound, "unexpected degree bound");
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
      const std::vector<Complex> z{Complex(-1.5 + 0.16 * k, 0.8 * std::cos(0.9 * k))};
      Complex sum = 0.0;
      for (std::size_t j = 0; j < 2; ++j) sum += evaluate(g.poly(j), z) * out.cofactors[j](z);
      worst = std::max(worst, std::abs(sum - evaluate(phi, z)));
    }
    require(worst < kKernelResidualTol, std::string("Φ = ") + text + " residual " + std::to_string(worst));
    for (std::size_t j = 0; j < 2; ++j)
      require(out.cofactors[j].degree(kKernelDegreeTol) + static_cast<int>(g.degree(j)) <= bound,
              std::string("Φ = ") + text + ": deg F_jQ_j above the bound");
    const double dist = exact_subspace_distance(g, phi, bound, out.cofactors);
    require(dist < kKernelDistanceTol, std::string("Φ = ") + text + " distance " + std::to_string(dist));
  }
}

// --- 7 -------------------------------------------------------------------
void hefer_suite() {
  Rng rng(7007);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const Polynomial f = random_poly(rng, n, 4, 8);
    const auto h = hefer_decompose(f);
    require(verify_hefer(f, h), "identity fails for F = " + to_string(f));
    for (const auto& form : h.forms) require(form.degree() <= std::max(f.degree(), 0) - 1, "degree bound");
    const auto zeta = random_point(rng, n), z = random_point(rng, n);
    std::vector<Rational> joint(zeta);
    joint.insert(joint.end(), z.begin(), z.end());
    Rational lhs = 0;
    for (std::size_t k = 0; k < n; ++k) lhs += evaluate(h.forms[k], joint) * (zeta[k] - z[k]);
    require(lhs == evaluate(f, zeta) - evaluate(f, z), "pointwise identity fails for F = " + to_string(f));
  }
}

// --- 8 -------------------------------------------------------------------
void solver_properties() {
  Rng rng(8008);
  const auto random_system = [&rng](std::size_t n, std::size_t m) {
    std::vector<Polynomial> polys;
    std::vector<unsigned> degrees;
    for (std::size_t j = 0; j < m; ++j) {
      polys.push_back(random_nonzero_poly(rng, n, 2, 3));
      degrees.push_back(static_cast<unsigned>(polys.back().degree()) + (uniform_int(rng, 0, 3) == 0 ? 1u : 0u));
    }
    return GeneratorSystem(n, polys, degrees);
  };
  std::size_t certificates = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const std::size_t m = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const auto g = random_system(n, m);
    Polynomial phi = random_poly(rng, n, 3, 3);
    if (trial % 2 == 0) {
      // Planted member.
      phi = Polynomial(n);
      for (std::size_t j = 0; j < m; ++j) phi += g.poly(j) * random_poly(rng, n, 1, 2);
    }
    const int r = std::max(phi.degree(), 0) + static_cast<int>(uniform_int(rng, 0, 2)) + (trial % 2 == 0 ? 1 : 0);
    const auto out = divide(g, phi, r);
    if (trial % 2 == 0) require(out.feasible(), "planted member not found");
    if (!out.feasible()) continue;
    ++certificates;
    require(verify(g, phi, *out.certificate), "soundness");
    for (int extra = 1; extra <= 2; ++extra) {
      const auto more = divide(g, phi, r + extra);
      require(more.feasible() && verify(g, phi, *more.certificate), "monotonicity");
    }
    std::vector<Polynomial> scaled;
    std::vector<Rational> c;
    for (std::size_t j = 0; j < m; ++j) {
      c.push_back(random_nonzero_rational(rng));
      scaled.push_back(g.poly(j) * c.back());
    }
    const auto s = divide(GeneratorSystem(n, scaled, g.degrees()), phi, r);
    require(s.feasible(), "scaling changed feasibility");
    for (std::size_t j = 0; j < m; ++j)
      require(s.certificate->cofactors[j] == out.certificate->cofactors[j] * (1 / c[j]), "scaling of cofactors");
    std::vector<Polynomial> reversed(g.polys().rbegin(), g.polys().rend());
    std::vector<unsigned> rdeg(g.degrees().rbegin(), g.degrees().rend());
    const GeneratorSystem gr(n, reversed, rdeg);
    const auto p = divide(gr, phi, r);
    require(p.feasible() && verify(gr, phi, *p.certificate), "permutation changed feasibility");
    DivisionCertificate moved = *out.certificate;
    std::reverse(moved.cofactors.begin(), moved.cofactors.end());
    require(verify(gr, phi, moved), "permuted certificate");
  }
  require(certificates >= 150, "too few certificates exercised");

  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_system(2, 2);
    const Polynomial phi = random_nonzero_poly(rng, 2, 2, 3);
    const int slope = std::max(phi.degree(), 1) + 1;
    const auto res = power_divide(g, phi, 3, [slope](unsigned nu) { return slope * static_cast<int>(nu); });
    if (res.outcome.feasible()) require(verify(g, phi, *res.outcome.certificate), "power_divide soundness");
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "coordinate-power sharpness", 10, coordinate_power_sharpness},
      {2, "Macaulay bound", 5, macaulay_bound},
      {3, "Noether property", 20, noether},
      {4, "residue / solver oracle equivalence", 60, residue_oracle},
      {5, "Bergman reproduction", 30, bergman},
      {6, "explicit division formula", 60, division_formula},
      {7, "Hefer suite", 10, hefer_suite},
      {8, "solver soundness and monotonicity", 60, solver_properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run();
    } catch (const Failure& f) {
      detail = f.detail;
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (detail.empty() && seconds > c.limit_seconds) detail = "exceeded time limit";
    const bool pass = detail.empty();
    failures += pass ? 0 : 1;
    std::printf("%s criterion %d: %s (%.2f s, limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                c.limit_seconds, pass ? "" : ": ", detail.c_str());
  }
  return failures;
}
