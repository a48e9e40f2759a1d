#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace polydiv {

using Complex = std::complex<double>;

struct QuadratureNode {
  std::array<Complex, 2> coords{};
  std::size_t n = 0;
  double weight = 0.0;
  std::span<const Complex> point() const { return {coords.data(), n}; }
};

/// Fubini–Study volume rule on P^n in the chart z0 = 1, normalized to total
/// volume 1. Nodes are produced on demand; size() can be large for n = 2.
class QuadratureRule {
 public:
  QuadratureRule(std::size_t n, std::size_t resolution);

  std::size_t n() const noexcept { return n_; }
  std::size_t resolution() const noexcept { return res_; }
  std::size_t size() const noexcept;
  QuadratureNode node(std::size_t i) const;

  template <class F>
  void for_each(F&& f) const {
    const std::size_t count = size();
    for (std::size_t i = 0; i < count; ++i) f(node(i));
  }

 private:
  std::size_t n_;
  std::size_t res_;
  std::vector<double> gl_nodes_;    // on [0, π/2]
  std::vector<double> gl_weights_;
  std::vector<Complex> phases_;     // e^{2πik/res}
};

/// n = 1: trapezoid in arg ζ, Gauss–Legendre in θ with |ζ| = tan θ.
/// n = 2: ζ1 = tanθ cosψ e^{iφ1}, ζ2 = tanθ sinψ e^{iφ2}, Gauss–Legendre in
/// θ and ψ, trapezoid in φ1 and φ2. Throws DimensionError for other n.
QuadratureRule fs_quadrature(std::size_t n, std::size_t resolution);

/// Pairwise (cascade) summation; the result depends only on the order of add().
template <class T>
class PairwiseSum {
 public:
  void add(T v) {
    std::size_t count = 1;
    while (!stack_.empty() && stack_.back().count == count) {
      v = stack_.back().value + v;
      count *= 2;
      stack_.pop_back();
    }
    stack_.push_back({v, count});
  }
  T total() const {
    T out{};
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) out = it->value + out;
    return out;
  }

 private:
  struct Partial {
    T value;
    std::size_t count;
  };
  std::vector<Partial> stack_;
};

}  // namespace polydiv
