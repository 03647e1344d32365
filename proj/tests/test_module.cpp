#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "knotcert/errors.hpp"
#include "knotcert/module.hpp"
#include "support.hpp"

using namespace knotcert;
using testsupport::random_unimodular;

namespace {
ModulePresentation M(const char* text) { return ModulePresentation(LaurentMatrix::parse(text)); }
}  // namespace

TEST_CASE("triviality is a unit determinant") {
  CHECK(is_trivial(ModulePresentation()));  // 0x0 presents the zero module
  CHECK(is_trivial(M("t")));
  CHECK(is_trivial(M("-t^3")));
  CHECK(is_trivial(M("t,1;0,-t^2")));
  CHECK_FALSE(is_trivial(M("t-1")));
  CHECK_FALSE(is_trivial(M("2")));
  CHECK_FALSE(is_trivial(M("0")));
  CHECK_FALSE(is_trivial(M("t-1,0;0,t-1")));
}

TEST_CASE("row operations preserve triviality") {
  std::mt19937 rng(41);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int i = 0; i < 15; ++i) CHECK(is_trivial(ModulePresentation(random_unimodular(rng, n))));
}

TEST_CASE("cyclic classes and the cyclic-scope comparison") {
  CHECK(cyclic_class(M("t-1")) == AlexanderClass(LaurentPoly::parse("t-1")));
  CHECK(cyclic_class(M("t-1")).to_string() == "t - 1");
  CHECK(cyclic_class(ModulePresentation()).is_unit());
  CHECK(cyclic_class(M("0")).is_zero());

  // 1 - t^-1 = t^-1 (t - 1): the same cyclic module
  CHECK(same_cyclic_module(M("t-1"), M("1 - t^-1")));
  CHECK(same_cyclic_module(M("t-1"), M("-t+1")));
  CHECK_FALSE(same_cyclic_module(M("t-1"), M("t+1")));
  // both trivial: the 0x0 and a unit 1x1 present isomorphic (zero) modules
  CHECK(same_cyclic_module(ModulePresentation(), M("t")));
  CHECK_FALSE(same_cyclic_module(ModulePresentation(), M("t-1")));

  CHECK_THROWS_AS(same_cyclic_module(M("t,0;0,t"), M("t-1")), NotCyclicScopeError);
  CHECK_THROWS_AS(same_cyclic_module(M("t-1"), M("t,0;0,t")), NotCyclicScopeError);
}

TEST_CASE("Fitting ideal generators are the complementary-size minors") {
  const ModulePresentation m = M("t-1,0;0,t-1");
  const LaurentPoly tm1 = LaurentPoly::parse("t-1");

  const auto f0 = fitting_generators(m, 0);  // 2x2 minors: the determinant
  REQUIRE(f0.size() == 1);
  CHECK(f0[0] == tm1 * tm1);

  const auto f1 = fitting_generators(m, 1);  // 1x1 minors: the entries
  REQUIRE(f1.size() == 4);
  CHECK(f1[0] == tm1);
  CHECK(f1[1].is_zero());
  CHECK(f1[2].is_zero());
  CHECK(f1[3] == tm1);

  const auto f2 = fitting_generators(m, 2);  // convention: generated by 1
  REQUIRE(f2.size() == 1);
  CHECK(f2[0] == LaurentPoly::one());

  CHECK_THROWS_AS(fitting_generators(m, 3), std::out_of_range);

  // zero module: every Fitting ideal is the whole ring
  const auto z0 = fitting_generators(ModulePresentation(), 0);
  REQUIRE(z0.size() == 1);
  CHECK(z0[0] == LaurentPoly::one());
}

TEST_CASE("conjugation inverts the deck transformation") {
  const ModulePresentation m = M("t-1,t;0,t^2");
  const ModulePresentation c = conjugated(m);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(c.matrix().at(i, j) == m.matrix().at(i, j).invert_variable());
  CHECK(conjugated(c) == m);

  // conjugating Lambda/(t-1) lands in the same cyclic class
  CHECK(same_cyclic_module(conjugated(M("t-1")), M("t-1")));
  CHECK(is_trivial(conjugated(M("t"))));

  std::mt19937 rng(42);
  for (int i = 0; i < 30; ++i) {
    const ModulePresentation r = ModulePresentation(testsupport::random_laurent_matrix(rng, 3));
    CHECK(is_trivial(conjugated(r)) == is_trivial(r));
  }
}
