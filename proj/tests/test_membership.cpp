#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "polydiv/error.hpp"
#include "polydiv/membership.hpp"
#include "support.hpp"

using namespace polydiv;
using namespace polydiv::testing;

namespace {

GeneratorSystem system_of(std::size_t n, std::initializer_list<const char*> gens,
                          std::optional<std::vector<unsigned>> degrees = std::nullopt) {
  std::vector<Polynomial> polys;
  for (const char* g : gens) polys.push_back(parse(g, n));
  return GeneratorSystem(n, std::move(polys), degrees);
}

GeneratorSystem random_system(Rng& rng, std::size_t n, std::size_t m, int max_degree) {
  std::vector<Polynomial> polys;
  std::vector<unsigned> degrees;
  for (std::size_t j = 0; j < m; ++j) {
    polys.push_back(random_nonzero_poly(rng, n, max_degree, 3));
    degrees.push_back(static_cast<unsigned>(polys.back().degree()) + (uniform_int(rng, 0, 3) == 0 ? 1u : 0u));
  }
  return GeneratorSystem(n, std::move(polys), degrees);
}

// Rank of the Macaulay matrix with and without the target column.
std::pair<std::size_t, std::size_t> ranks(const GeneratorSystem& g, const Polynomial& phi, int r) {
  const MacaulaySystem sys = build_macaulay(g, r);
  Rows a(sys.rows.size(), std::vector<Rational>(sys.cols.size()));
  for (std::size_t i = 0; i < sys.rows.size(); ++i)
    for (std::size_t j = 0; j < sys.cols.size(); ++j) a[i][j] = sys.matrix(i, j);
  Rows aug = a;
  for (std::size_t i = 0; i < sys.rows.size(); ++i) aug[i].push_back(phi.coefficient(sys.rows[i]));
  return {naive_reduce(a).rank, naive_reduce(aug).rank};
}

Polynomial combination(const GeneratorSystem& g, const std::vector<Polynomial>& q) {
  Polynomial out(g.n());
  for (std::size_t j = 0; j < g.m(); ++j) out += g.poly(j) * q[j];
  return out;
}

}  // namespace

TEST_CASE("generator system validation") {
  CHECK_THROWS_AS(GeneratorSystem(1, {}), Error);
  CHECK_THROWS_AS(GeneratorSystem(1, {Polynomial(1)}), Error);
  CHECK_THROWS_AS(GeneratorSystem(2, {parse("z1", 1)}), DimensionError);
  CHECK_THROWS_AS(system_of(1, {"z1^2"}, std::vector<unsigned>{1}), DegreeError);
  CHECK_THROWS_AS(system_of(1, {"z1^2"}, std::vector<unsigned>{2, 2}), Error);
  CHECK(system_of(1, {"z1"}, std::vector<unsigned>{3}).degree(0) == 3);
}

TEST_CASE("build_macaulay examples") {
  const auto s1 = build_macaulay(system_of(1, {"z1"}), 1);
  CHECK(s1.matrix.rows() == 2);
  CHECK(s1.matrix.cols() == 1);
  CHECK(s1.matrix(0, 0) == 0);
  CHECK(s1.matrix(1, 0) == 1);
  CHECK(s1.rows[0] == Monomial{0});

  const auto s2 = build_macaulay(system_of(2, {"z1^2", "z2^2"}), 2);
  CHECK(s2.matrix.rows() == 6);
  REQUIRE(s2.matrix.cols() == 2);
  for (std::size_t c = 0; c < 2; ++c) {
    int ones = 0, zeros = 0;
    for (std::size_t r = 0; r < 6; ++r) (s2.matrix(r, c) == 1 ? ones : zeros) += s2.matrix(r, c) == 0 || s2.matrix(r, c) == 1;
    CHECK(ones == 1);
    CHECK(zeros == 5);
  }

  const auto s3 = build_macaulay(system_of(2, {"z1^2", "z2^2"}), 4);
  CHECK(s3.rows.size() == 15);
  CHECK(s3.cols.size() == 12);
  CHECK(build_macaulay(system_of(2, {"z1^3", "z2"}), 2).cols.size() == 3);
}

TEST_CASE("property: Macaulay dimensions follow the binomial counts") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const auto g = random_system(rng, n, static_cast<std::size_t>(uniform_int(rng, 1, 3)), 3);
    const int r = static_cast<int>(uniform_int(rng, 0, 5));
    const auto sys = build_macaulay(g, r);
    CHECK(sys.rows.size() == count_monomials_up_to(n, r));
    std::size_t cols = 0;
    for (unsigned d : g.degrees()) cols += count_monomials_up_to(n, r - static_cast<int>(d));
    CHECK(sys.cols.size() == cols);
  }
}

TEST_CASE("divide examples") {
  const auto g = system_of(2, {"z1^2", "z2^2"});
  const auto phi4 = parse("(z1+z2)^4", 2);
  const auto ok = divide(g, phi4, 4);
  REQUIRE(ok.feasible());
  CHECK(ok.certificate->verified);
  CHECK(verify(g, phi4, *ok.certificate));
  CHECK(combination(g, ok.certificate->cofactors) == phi4);

  const auto bad = divide(g, parse("(z1+z2)^2", 2), 8);
  CHECK(!bad.feasible());
  REQUIRE(bad.witness.has_value());
  CHECK(*bad.witness == Monomial{1, 1});

  const auto self = divide(g, g.poly(0), 2);
  REQUIRE(self.feasible());
  CHECK(self.certificate->cofactors[0] == Polynomial::constant(2, 1));
  CHECK(self.certificate->cofactors[1].is_zero());

  const auto zero = divide(g, Polynomial(2), 0);
  REQUIRE(zero.feasible());
  CHECK(zero.certificate->cofactors[0].is_zero());
  CHECK(zero.certificate->max_deg_fq(g) == -1);

  CHECK_THROWS_AS(divide(g, phi4, 3), DegreeError);
}

TEST_CASE("bezout examples") {
  const auto lin = system_of(2, {"z1", "z2", "1 - z1 - z2"});
  const auto b1 = bezout(lin, 1);
  REQUIRE(b1.feasible());
  for (const auto& q : b1.certificate->cofactors) CHECK(q == Polynomial::constant(2, 1));

  const auto sq = system_of(1, {"z1^2", "(1+z1)^2"});
  const auto b3 = bezout(sq, 3);
  REQUIRE(b3.feasible());
  CHECK(verify(sq, Polynomial::constant(1, 1), *b3.certificate));
  // Hand oracle: 1 = (1 + z - z)^3 expanded.
  const DivisionCertificate hand{{parse("3 + 2*z1", 1), parse("1 - 2*z1", 1)}, 1, 3, false};
  CHECK(verify(sq, Polynomial::constant(1, 1), hand));
  CHECK(!bezout(sq, 2).feasible());
}

TEST_CASE("power_divide examples") {
  const auto g = system_of(2, {"z1^2", "z2^2"});
  const auto res = power_divide(g, parse("(z1+z2)^2", 2), 2, [](unsigned nu) { return 2 * static_cast<int>(nu); });
  CHECK(res.nu == 2);
  REQUIRE(res.outcome.feasible());
  CHECK(verify(g, parse("(z1+z2)^2", 2), *res.outcome.certificate));

  const auto one = power_divide(g, g.poly(0), 3, [](unsigned) { return 2; });
  CHECK(one.nu == 1);

  const auto never = power_divide(system_of(2, {"z1"}), parse("z2", 2), 3, [](unsigned nu) { return 5 * static_cast<int>(nu); });
  CHECK(never.nu == 0);
  CHECK(!never.outcome.feasible());
}

TEST_CASE("koszul examples") {
  const auto g = system_of(2, {"z1", "z2"});
  KoszulTuple phi{1, 2, {{{0}, parse("-z2", 2)}, {{1}, parse("z1", 2)}}};
  const auto out = koszul_divide(g, phi);
  REQUIRE(out.feasible());
  REQUIRE(out.psi->components.size() == 1);
  CHECK(out.psi->components.at({0, 1}) == Polynomial::constant(2, 1));
  CHECK(koszul_apply(g, *out.psi).components == phi.components);

  KoszulTuple unit{1, 1, {{{0}, Polynomial::constant(2, 1)}, {{1}, Polynomial(2)}}};
  CHECK(!koszul_divide(g, unit).feasible());

  const auto pant = system_of(2, {"z1^2", "z2^2"});
  for (const char* t : {"(z1+z2)^4", "(z1+z2)^2"}) {
    KoszulTuple scalar{0, 4, {{{}, parse(t, 2)}}};
    const auto k = koszul_divide(pant, scalar);
    CHECK(k.feasible() == divide(pant, parse(t, 2), 4).feasible());
    if (k.feasible()) CHECK(koszul_apply(pant, *k.psi).components.at({}) == parse(t, 2));
  }
}

TEST_CASE("verify examples") {
  const auto g = system_of(2, {"z1^2", "z2^2"});
  const auto phi = parse("(z1+z2)^4", 2);
  DivisionCertificate cert{{parse("z1^2 + 4*z1*z2 + 6*z2^2", 2), parse("4*z1*z2 + z2^2", 2)}, 1, 4, false};
  CHECK(verify(g, phi, cert));
  DivisionCertificate tampered = cert;
  tampered.cofactors[0] += Polynomial::constant(2, 1);
  CHECK(!verify(g, phi, tampered));
  DivisionCertificate tight = cert;
  tight.r = 3;
  CHECK(!verify(g, phi, tight));
  const auto single = system_of(1, {"z1"});
  CHECK(!verify(single, parse("z1", 1), DivisionCertificate{{Polynomial::constant(1, 1)}, 1, 0, false}));
  CHECK(verify(single, parse("z1", 1), DivisionCertificate{{Polynomial::constant(1, 1)}, 1, 1, false}));
  CHECK(!verify(single, parse("z1", 1), DivisionCertificate{{}, 1, 1, false}));
}

TEST_CASE("threshold examples") {
  const auto t1 = noll_threshold({1, 1, 1}, 2);
  CHECK(!t1.auto_satisfied);
  CHECK(t1.minimal_r == 1);
  CHECK(noll_threshold({2, 2}, 2).auto_satisfied);
  const auto t3 = noll_threshold({3, 2, 2, 1}, 2);
  CHECK(!t3.auto_satisfied);
  CHECK(t3.minimal_r == 5);
  CHECK(noll_threshold({1, 1, 1, 1}, 2, 1).auto_satisfied == false);
  CHECK(noll_threshold({1, 1, 1, 1}, 2, 1).minimal_r == 2);
  CHECK(noll_threshold({1, 1, 1}, 2, 1).auto_satisfied);

  const auto s = skolk_oppo_budget({2, 2}, 2, 2, 2, BudgetMode::Skolk);
  CHECK(s.power == 2);
  CHECK(s.degree_budget == 4);
  CHECK(s.condition_ok);
  const auto o = skolk_oppo_budget({2, 2}, 1, 2, 2, BudgetMode::Oppo);
  CHECK(o.power == 1);
  CHECK(o.degree_budget == 2);
  CHECK(!o.condition_ok);
  CHECK(skolk_oppo_budget({5, 5}, 3, 2, 0, BudgetMode::Skolk).condition_ok);
}

TEST_CASE("JSON certificate round trip") {
  const auto g = system_of(2, {"z1^2", "z2^2"}, std::vector<unsigned>{2, 3});
  const auto phi = parse("(z1+z2)^4", 2);
  const auto out = divide(g, phi, 5);
  REQUIRE(out.feasible());
  const std::string text = certificate_to_json(g, phi, *out.certificate);
  const ParsedCertificate back = certificate_from_json(text);
  CHECK(back.generators.polys() == g.polys());
  CHECK(back.generators.degrees() == g.degrees());
  CHECK(back.target == phi);
  CHECK(back.certificate.cofactors == out.certificate->cofactors);
  CHECK(back.certificate.r == 5);
  CHECK(back.claimed_verified);
  CHECK(verify(back.generators, back.target, back.certificate));
  CHECK_THROWS_AS(certificate_from_json("{"), Error);
  CHECK_THROWS_AS(certificate_from_json("{\"n\": 2}"), Error);
}

TEST_CASE("property: soundness and completeness on random systems") {
  Rng rng(32);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 2));
    const auto g = random_system(rng, n, static_cast<std::size_t>(uniform_int(rng, 1, 3)), 2);
    const Polynomial phi = random_poly(rng, n, 3, 3);
    const int r = std::max(phi.degree(), 0) + static_cast<int>(uniform_int(rng, 0, 2));
    const auto out = divide(g, phi, r);
    const auto [rank_a, rank_ab] = ranks(g, phi, r);
    CHECK(out.feasible() == (rank_a == rank_ab));
    if (out.feasible()) {
      ++feasible;
      CHECK(out.certificate->verified);
      CHECK(verify(g, phi, *out.certificate));
      CHECK(out.certificate->max_deg_fq(g) <= r);
      for (std::size_t j = 0; j < g.m(); ++j)
        if (!out.certificate->cofactors[j].is_zero())
          CHECK(out.certificate->cofactors[j].degree() <= r - static_cast<int>(g.degree(j)));
    } else {
      ++infeasible;
      CHECK(out.witness.has_value());
    }
  }
  CHECK(infeasible > 0);

  // Planted certificates: any Σ F_j Q_j within the budget must be found.
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const auto g = random_system(rng, n, static_cast<std::size_t>(uniform_int(rng, 1, 3)), 2);
    const int r = static_cast<int>(*std::max_element(g.degrees().begin(), g.degrees().end())) +
                  static_cast<int>(uniform_int(rng, 0, 2));
    std::vector<Polynomial> q;
    for (std::size_t j = 0; j < g.m(); ++j) {
      const int budget = r - static_cast<int>(g.degree(j));
      q.push_back(budget < 0 ? Polynomial(n) : random_poly(rng, n, budget, 3));
    }
    const Polynomial phi = combination(g, q);
    const auto out = divide(g, phi, r);
    REQUIRE(out.feasible());
    ++feasible;
    CHECK(verify(g, phi, *out.certificate));
  }
  CHECK(feasible > 0);
}

TEST_CASE("property: monotonicity in r") {
  Rng rng(33);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 2));
    const auto g = random_system(rng, n, static_cast<std::size_t>(uniform_int(rng, 1, 3)), 2);
    const Polynomial phi = random_poly(rng, n, 3, 3);
    const int r = std::max(phi.degree(), 0) + static_cast<int>(uniform_int(rng, 0, 2));
    const auto out = divide(g, phi, r);
    if (!out.feasible()) continue;
    for (int extra = 1; extra <= 2; ++extra) {
      const auto more = divide(g, phi, r + extra);
      REQUIRE(more.feasible());
      CHECK(verify(g, phi, *more.certificate));
      DivisionCertificate relaxed = *out.certificate;
      relaxed.r = r + extra;
      CHECK(verify(g, phi, relaxed));
    }
  }
}

TEST_CASE("property: scaling invariance") {
  Rng rng(34);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 2));
    const auto g = random_system(rng, n, static_cast<std::size_t>(uniform_int(rng, 1, 3)), 2);
    std::vector<Rational> c;
    std::vector<Polynomial> scaled;
    for (std::size_t j = 0; j < g.m(); ++j) {
      c.push_back(random_nonzero_rational(rng));
      scaled.push_back(g.poly(j) * c.back());
    }
    const GeneratorSystem gs(n, scaled, g.degrees());
    const Polynomial phi = random_poly(rng, n, 3, 3);
    const int r = std::max(phi.degree(), 0) + static_cast<int>(uniform_int(rng, 0, 2));
    const auto a = divide(g, phi, r), b = divide(gs, phi, r);
    REQUIRE(a.feasible() == b.feasible());
    if (!a.feasible()) continue;
    for (std::size_t j = 0; j < g.m(); ++j) CHECK(b.certificate->cofactors[j] == a.certificate->cofactors[j] * (1 / c[j]));
  }
}

TEST_CASE("property: permutation equivariance") {
  Rng rng(35);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 2));
    const auto g = random_system(rng, n, static_cast<std::size_t>(uniform_int(rng, 2, 3)), 2);
    std::vector<std::size_t> perm(g.m());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Polynomial> polys;
    std::vector<unsigned> degrees;
    for (auto p : perm) {
      polys.push_back(g.poly(p));
      degrees.push_back(g.degree(p));
    }
    const GeneratorSystem gp(n, polys, degrees);
    const Polynomial phi = random_poly(rng, n, 3, 3);
    const int r = std::max(phi.degree(), 0) + static_cast<int>(uniform_int(rng, 0, 2));
    const auto a = divide(g, phi, r), b = divide(gp, phi, r);
    REQUIRE(a.feasible() == b.feasible());
    if (!a.feasible()) continue;
    DivisionCertificate moved = *a.certificate;
    for (std::size_t j = 0; j < g.m(); ++j) moved.cofactors[j] = a.certificate->cofactors[perm[j]];
    CHECK(verify(gp, phi, moved));
    CHECK(verify(gp, phi, *b.certificate));
  }
}

TEST_CASE("property: Noether division by the coordinates") {
  Rng rng(36);
  const auto g = system_of(2, {"z1", "z2"});
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial phi = random_nonzero_poly(rng, 2, 6, 6);
    phi.add_term(Monomial{0, 0}, -phi.coefficient(Monomial{0, 0}));
    if (phi.is_zero()) phi = parse("z1", 2);
    const auto out = divide(g, phi, phi.degree());
    REQUIRE(out.feasible());
    CHECK(verify(g, phi, *out.certificate));
  }
}

TEST_CASE("property: every power_divide and koszul certificate verifies") {
  Rng rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2;
    const auto g = random_system(rng, n, static_cast<std::size_t>(uniform_int(rng, 2, 3)), 2);
    const Polynomial phi = random_nonzero_poly(rng, n, 2, 3);
    const int slope = std::max(phi.degree(), 1) + static_cast<int>(uniform_int(rng, 0, 1));
    const auto res = power_divide(g, phi, 3, [slope](unsigned nu) { return slope * static_cast<int>(nu); });
    if (res.outcome.feasible()) {
      CHECK(res.outcome.certificate->nu == res.nu);
      CHECK(verify(g, phi, *res.outcome.certificate));
    }

    // ell = 1 tuples in the image of δ_f are always solvable.
    KoszulTuple psi{2, 4, {}};
    for (std::size_t a = 0; a < g.m(); ++a)
      for (std::size_t b = a + 1; b < g.m(); ++b) {
        const int budget = psi.r - static_cast<int>(g.degree(a) + g.degree(b));
        psi.components[{a, b}] = budget < 0 ? Polynomial(n) : random_poly(rng, n, budget, 2);
      }
    const KoszulTuple phi1 = koszul_apply(g, psi);
    const auto k = koszul_divide(g, phi1);
    REQUIRE(k.feasible());
    CHECK(koszul_apply(g, *k.psi).components == phi1.components);
  }
}
