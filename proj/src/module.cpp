#include "knotcert/module.hpp"

#include <stdexcept>

#include "knotcert/errors.hpp"

namespace knotcert {

bool is_trivial(const ModulePresentation& m) { return det_laurent(m.matrix()).is_unit(); }

AlexanderClass cyclic_class(const ModulePresentation& m) {
  return AlexanderClass(det_laurent(m.matrix()));
}

bool same_cyclic_module(const ModulePresentation& m1, const ModulePresentation& m2) {
  if (m1.size() > 1 || m2.size() > 1) throw NotCyclicScopeError(m1.size(), m2.size());
  return cyclic_class(m1) == cyclic_class(m2);
}

std::vector<LaurentPoly> fitting_generators(const ModulePresentation& m, std::size_t i) {
  if (i > m.size())
    throw std::out_of_range("Fitting index " + std::to_string(i) + " out of range for size " +
                            std::to_string(m.size()));
  if (i == m.size()) return {LaurentPoly::one()};
  return minors(m.matrix(), m.size() - i);
}

ModulePresentation conjugated(const ModulePresentation& m) {
  return ModulePresentation(m.matrix().variable_inverted());
}

}  // namespace knotcert
