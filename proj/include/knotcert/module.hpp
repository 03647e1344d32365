#pragma once

#include <vector>

#include "knotcert/laurent.hpp"
#include "knotcert/matrix.hpp"

namespace knotcert {

// Finitely presented module over Z[t, t^-1] with a square presentation
// (equal generator and relation counts). The 0x0 matrix presents the zero
// module. Models the middle homology of an infinite cyclic knot cover.
class ModulePresentation {
 public:
  ModulePresentation() = default;  // zero module
  explicit ModulePresentation(LaurentMatrix relations) : p_(std::move(relations)) {}

  const LaurentMatrix& matrix() const { return p_; }
  std::size_t size() const { return p_.size(); }

  bool operator==(const ModulePresentation&) const = default;

 private:
  LaurentMatrix p_;
};

// True iff the zeroth Fitting ideal is the whole ring; for a square
// presentation that is exactly a unit determinant.
bool is_trivial(const ModulePresentation& m);

// Canonicalized determinant: the order-ideal generator, up to units. For a
// 1x1 presentation this is the defining polynomial of the cyclic module.
AlexanderClass cyclic_class(const ModulePresentation& m);

// Decides isomorphism on the cyclic scope only (presentations of size <= 1,
// where the order ideal is a complete invariant); throws NotCyclicScopeError
// on larger inputs.
bool same_cyclic_module(const ModulePresentation& m1, const ModulePresentation& m2);

// Generators of the i-th Fitting ideal: all (size-i) x (size-i) minors;
// for i = size the single generator 1. No ideal-equality decision is made.
std::vector<LaurentPoly> fitting_generators(const ModulePresentation& m, std::size_t i);

// The module with the deck transformation inverted (entrywise t -> t^-1);
// the algebraic shadow of reversing or mirroring the knot.
ModulePresentation conjugated(const ModulePresentation& m);

}  // namespace knotcert
