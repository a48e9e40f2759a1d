#include "polydiv/error.hpp"
#include "polydiv/membership.hpp"

namespace polydiv {

GeneratorSystem::GeneratorSystem(std::size_t n, std::vector<Polynomial> polys,
                                 std::optional<std::vector<unsigned>> degrees)
    : n_(n), polys_(std::move(polys)) {
  if (polys_.empty()) throw Error("a generator system needs at least one polynomial");
  for (const auto& p : polys_) {
    if (p.nvars() != n_) throw DimensionError("generator has the wrong number of variables");
    if (p.is_zero()) throw Error("generators must be nonzero");
  }
  if (degrees) {
    if (degrees->size() != polys_.size())
      throw DimensionError("declared degree list length differs from generator count");
    degrees_ = std::move(*degrees);
    for (std::size_t j = 0; j < polys_.size(); ++j) {
      if (static_cast<int>(degrees_[j]) < polys_[j].degree())
        throw DegreeError("declared degree " + std::to_string(degrees_[j]) + " of generator " +
                          std::to_string(j + 1) + " is below its actual degree");
    }
  } else {
    for (const auto& p : polys_) degrees_.push_back(static_cast<unsigned>(p.degree()));
  }
}

}  // namespace polydiv
