#include "polydiv/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "polydiv/error.hpp"

namespace polydiv {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t var) {
  Polynomial p(nvars);
  p.add_term(Monomial::unit(nvars, var), 1);
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

int Polynomial::degree() const {
  // Descending grevlex puts a top-degree term first.
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.degree());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw DimensionError("monomial does not match polynomial ring");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool Polynomial::is_homogeneous(unsigned d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (other.nvars_ != nvars_)
    throw DimensionError("polynomials have different variable counts (" + std::to_string(nvars_) +
                         " vs " + std::to_string(other.nvars_) + ")");
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b);
  Polynomial out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(p.nvars(), 1);
  Polynomial base = p;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.nvars()) throw DimensionError("variable index out of range");
  Polynomial out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    std::vector<Monomial::Exponent> e = m.exponents();
    const auto k = e[var]--;
    out.add_term(Monomial(std::move(e)), c * Rational(k));
  }
  return out;
}

namespace {

template <class T>
T evaluate_impl(const Polynomial& p, std::span<const T> point) {
  if (point.size() != p.nvars())
    throw DimensionError("evaluation point has " + std::to_string(point.size()) +
                         " coordinates, polynomial has " + std::to_string(p.nvars()) +
                         " variables");
  T sum(0);
  for (const auto& [m, c] : p.terms()) {
    T term = T(c);
    for (std::size_t i = 0; i < m.nvars(); ++i)
      for (Monomial::Exponent e = 0; e < m[i]; ++e) term *= point[i];
    sum += term;
  }
  return sum;
}

}  // namespace

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  return evaluate_impl<Rational>(p, point);
}

Complex evaluate(const Polynomial& p, std::span<const Complex> point) {
  if (point.size() != p.nvars())
    throw DimensionError("evaluation point has " + std::to_string(point.size()) +
                         " coordinates, polynomial has " + std::to_string(p.nvars()) +
                         " variables");
  Complex sum(0.0);
  for (const auto& [m, c] : p.terms()) {
    Complex term(c.get_d());
    for (std::size_t i = 0; i < m.nvars(); ++i)
      for (Monomial::Exponent e = 0; e < m[i]; ++e) term *= point[i];
    sum += term;
  }
  return sum;
}

HomogeneousSection::HomogeneousSection(Polynomial poly, unsigned degree)
    : poly_(std::move(poly)), degree_(degree) {
  if (poly_.nvars() == 0) throw DimensionError("a section needs at least the variable z0");
  if (!poly_.is_homogeneous(degree_))
    throw DegreeError("polynomial is not homogeneous of degree " + std::to_string(degree_));
}

HomogeneousSection homogenize(const Polynomial& f, unsigned d) {
  if (f.degree() > static_cast<int>(d))
    throw DegreeError("cannot homogenize a degree " + std::to_string(f.degree()) +
                      " polynomial to degree " + std::to_string(d));
  Polynomial out(f.nvars() + 1);
  for (const auto& [m, c] : f.terms()) {
    std::vector<Monomial::Exponent> e;
    e.reserve(f.nvars() + 1);
    e.push_back(d - m.degree());
    e.insert(e.end(), m.exponents().begin(), m.exponents().end());
    out.add_term(Monomial(std::move(e)), c);
  }
  return HomogeneousSection(std::move(out), d);
}

Polynomial dehomogenize(const HomogeneousSection& s) {
  const Polynomial& p = s.poly();
  Polynomial out(p.nvars() - 1);
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Exponent> e(m.exponents().begin() + 1, m.exponents().end());
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

double section_norm_sq(std::span<const HomogeneousSection> sections, std::span<const Complex> z) {
  double zz = 0.0;
  for (const auto& zi : z) zz += std::norm(zi);
  if (zz == 0.0) throw DimensionError("section norm is undefined at z = 0");
  double total = 0.0;
  for (const auto& s : sections) {
    const double v = std::norm(evaluate(s.poly(), z));
    total += v / std::pow(zz, static_cast<double>(s.degree()));
  }
  return total;
}

}  // namespace polydiv
