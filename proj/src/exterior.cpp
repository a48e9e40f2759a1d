#include "polydiv/exterior.hpp"

#include <algorithm>
#include <bit>

#include "polydiv/error.hpp"

namespace polydiv {

FormLayout::FormLayout(std::size_t n, std::size_t m) : n_(n), m_(m) {
  if (2 * n + 3 * m > 32) throw DimensionError("exterior algebra layout exceeds 32 generators");
}

namespace {
Mask bit_range(std::size_t first, std::size_t count) {
  Mask out = 0;
  for (std::size_t i = 0; i < count; ++i) out |= Mask{1} << (first + i);
  return out;
}
}  // namespace

Mask FormLayout::holomorphic_mask() const noexcept { return bit_range(0, n_); }
Mask FormLayout::antiholomorphic_mask() const noexcept { return bit_range(n_, n_); }
Mask FormLayout::eps_mask() const noexcept { return bit_range(2 * n_, m_); }
Mask FormLayout::eps_star_mask() const noexcept { return bit_range(2 * n_ + m_, m_); }
Mask FormLayout::tilde_mask() const noexcept { return bit_range(2 * n_ + 2 * m_, m_); }

int wedge_sign(Mask a, Mask b) noexcept {
  // Count pairs (x in a, y in b) with x > y: each is one transposition.
  int swaps = 0;
  while (b != 0) {
    const int y = std::countr_zero(b);
    b &= b - 1;
    swaps += std::popcount(static_cast<Mask>(static_cast<std::uint64_t>(a) >> (y + 1)));
  }
  return (swaps & 1) ? -1 : 1;
}

FormElement FormElement::scalar(FormLayout layout, Complex c) {
  FormElement f(layout);
  if (c != Complex(0.0)) f.terms_.push_back({0, c});
  return f;
}

FormElement FormElement::generator(FormLayout layout, unsigned bit, Complex c) {
  FormElement f(layout);
  if (c != Complex(0.0)) f.terms_.push_back({Mask{1} << bit, c});
  return f;
}

Complex FormElement::coefficient(Mask mask) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                             [](const Term& t, Mask m) { return t.mask < m; });
  return (it != terms_.end() && it->mask == mask) ? it->coeff : Complex(0.0);
}

void FormElement::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.mask < b.mask; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    Term t = terms_[i++];
    while (i < terms_.size() && terms_[i].mask == t.mask) t.coeff += terms_[i++].coeff;
    if (t.coeff != Complex(0.0)) terms_[out++] = t;
  }
  terms_.resize(out);
}

FormElement& FormElement::operator+=(const FormElement& other) {
  if (!(other.layout_ == layout_)) throw DimensionError("form layouts differ");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  normalize();
  return *this;
}

FormElement& FormElement::operator-=(const FormElement& other) {
  if (!(other.layout_ == layout_)) throw DimensionError("form layouts differ");
  for (const auto& t : other.terms_) terms_.push_back({t.mask, -t.coeff});
  normalize();
  return *this;
}

FormElement& FormElement::operator*=(Complex c) {
  if (c == Complex(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

FormElement exterior_product(const FormElement& a, const FormElement& b) {
  if (!(a.layout_ == b.layout_)) throw DimensionError("form layouts differ");
  FormElement out(a.layout_);
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      if (ta.mask & tb.mask) continue;
      const double s = wedge_sign(ta.mask, tb.mask);
      out.terms_.push_back({ta.mask | tb.mask, s * ta.coeff * tb.coeff});
    }
  }
  out.normalize();
  return out;
}

FormElement FormElement::contract(unsigned bit) const {
  const Mask g = Mask{1} << bit;
  FormElement out(layout_);
  for (const auto& t : terms_) {
    if (!(t.mask & g)) continue;
    const int before = std::popcount(t.mask & (g - 1));
    out.terms_.push_back({t.mask & ~g, (before & 1) ? -t.coeff : t.coeff});
  }
  out.normalize();
  return out;
}

FormElement FormElement::drop(Mask mask) const {
  FormElement out(layout_);
  for (const auto& t : terms_)
    if (!(t.mask & mask)) out.terms_.push_back(t);
  return out;
}

FormElement FormElement::restrict_to(Mask mask) const {
  FormElement out(layout_);
  for (const auto& t : terms_)
    if ((t.mask & ~mask) == 0) out.terms_.push_back(t);
  return out;
}

FormElement FormElement::exp() const {
  for (const auto& t : terms_)
    if (std::popcount(t.mask) % 2 != 0) throw Error("exp is only defined for even elements");
  FormElement result = scalar(layout_, 1.0);
  FormElement power = scalar(layout_, 1.0);
  // The nilpotent part has at most 32 generators, so X^17 = 0.
  for (unsigned k = 1; k <= 17; ++k) {
    power = exterior_product(power, *this);
    power *= 1.0 / static_cast<double>(k);
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

FormElement FormElement::power(unsigned k) const {
  FormElement result = scalar(layout_, 1.0);
  for (unsigned i = 0; i < k; ++i) result = exterior_product(result, *this);
  return result;
}

FormElement FormElement::epsilon_integral() const {
  // (Σ ε*_j∧ε_j)^m/m! = ε*_1∧ε_1∧...∧ε*_m∧ε_m; its sign against the
  // canonical monomial follows from building it pair by pair.
  Mask w = 0;
  int w_sign = 1;
  for (std::size_t j = 0; j < layout_.m(); ++j) {
    const Mask pair_star = Mask{1} << layout_.eps_star(j);
    const Mask pair_eps = Mask{1} << layout_.eps(j);
    w_sign *= wedge_sign(w, pair_star);
    w |= pair_star;
    w_sign *= wedge_sign(w, pair_eps);
    w |= pair_eps;
  }
  FormElement out(layout_);
  for (const auto& t : terms_) {
    if ((t.mask & w) != w) continue;
    const Mask rest = t.mask & ~w;
    // mono(rest)∧mono(w) = wedge_sign·mono(t.mask), and mono(w) = w_sign·W.
    const int s = wedge_sign(rest, w) * w_sign;
    out.terms_.push_back({rest, static_cast<double>(s) * t.coeff});
  }
  out.normalize();
  return out;
}

}  // namespace polydiv
