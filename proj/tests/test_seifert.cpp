#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "knotcert/errors.hpp"
#include "knotcert/seifert.hpp"
#include "support.hpp"

using namespace knotcert;
using testsupport::random_seifert;

namespace {
SeifertMatrix S(const char* text, int q) { return SeifertMatrix::validate(IntMatrix::parse(text), q); }
}  // namespace

TEST_CASE("validation enforces the unimodularity and parity rules") {
  CHECK(S("1,1;0,-1", 3).knot_dimension() == 5);
  CHECK(S("-1,1;0,-1", 1).knot_dimension() == 1);
  CHECK(S("", 3).size() == 0);  // the unknot
  CHECK(S("", 2).size() == 0);
  CHECK(S("0,1;0,0", 3).size() == 2);  // A - A^T is the standard skew form

  CHECK_THROWS_AS(SeifertMatrix::validate(IntMatrix::identity(2), 0), std::invalid_argument);
  CHECK_THROWS_AS(SeifertMatrix::validate(IntMatrix::identity(2), -1), std::invalid_argument);

  // odd q: A - A^T skew, so odd size can never be unimodular; reported as the
  // structural parity error even when the entries are also non-unimodular
  CHECK_THROWS_AS(S("5", 3), OddSizeSkewError);
  CHECK_THROWS_AS(S("1,0,0;0,1,0;0,0,1", 1), OddSizeSkewError);

  // identity with q = 3: A - A^T = 0
  try {
    SeifertMatrix::validate(IntMatrix::identity(2), 3);
    FAIL("expected NonUnimodularError");
  } catch (const NonUnimodularError& e) {
    CHECK(e.determinant() == BigInt(0));
  }
  // even q rejects odd sizes through the determinant: the symmetrized matrix
  // has even diagonal, hence even determinant in odd size
  CHECK_THROWS_AS(S("1", 2), NonUnimodularError);
  CHECK_THROWS_AS(S("2,0;0,3", 2), NonUnimodularError);
}

TEST_CASE("presentation matrix is t*A + (-1)^q * A^T") {
  const LaurentMatrix p = presentation_matrix(S("1,1;0,-1", 3));
  CHECK(p.at(0, 0) == LaurentPoly::parse("t-1"));
  CHECK(p.at(0, 1) == LaurentPoly::parse("t"));
  CHECK(p.at(1, 0) == LaurentPoly::parse("-1"));
  CHECK(p.at(1, 1) == LaurentPoly::parse("-t+1"));

  const LaurentMatrix even = presentation_matrix(S("0,1;0,0", 2));
  CHECK(even.at(0, 1) == LaurentPoly::parse("t"));
  CHECK(even.at(1, 0) == LaurentPoly::parse("1"));  // +A^T for even q
}

TEST_CASE("Alexander classes of the named matrices") {
  CHECK(alexander_class(S("1,1;0,-1", 3)) == AlexanderClass(LaurentPoly::parse("t^2 - 3*t + 1")));
  CHECK(alexander_class(S("-1,1;0,-1", 1)) == AlexanderClass(LaurentPoly::parse("t^2 - t + 1")));
  CHECK(alexander_class(S("", 3)).is_unit());          // unknot
  CHECK(alexander_class(S("0,1;0,0", 3)).is_unit());   // det = t
}

TEST_CASE("certificates separate the knotted and undecided cases") {
  const KnottednessCertificate knotted = knottedness_certificate(S("1,1;0,-1", 3));
  CHECK(knotted.verdict == Verdict::TrulyKnotted);
  CHECK(knotted.evidence == AlexanderClass(LaurentPoly::parse("t^2 - 3*t + 1")));
  CHECK(!knotted.narrative.empty());
  CHECK(to_string(knotted.verdict) == "truly-knotted");

  const KnottednessCertificate open = knottedness_certificate(S("0,1;0,0", 3));
  CHECK(open.verdict == Verdict::NotDistinguished);
  CHECK(open.evidence.is_unit());
  CHECK(to_string(open.verdict) == "not-distinguished");
}

TEST_CASE("evaluation at 1 recovers the validity determinant") {
  // det(t*A + e*A^T) at t = 1 is det(A + e*A^T), which validity pins to +-1
  std::mt19937 rng(31);
  for (int q : {1, 2, 3})
    for (std::size_t size : {2, 4}) {
      for (int i = 0; i < 10; ++i) {
        const SeifertMatrix s = random_seifert(rng, size, q);
        const int sign = q % 2 == 0 ? 1 : -1;
        const IntMatrix sym =
            sign == 1 ? s.matrix() + s.matrix().transposed() : s.matrix() - s.matrix().transposed();
        const LaurentPoly delta = det_laurent(presentation_matrix(s));
        CHECK(delta.eval(BigInt(1)) == BigRat(det_int(sym)));
        const BigRat at_one = delta.eval(BigInt(1));
        CHECK((at_one == BigRat(1) || at_one == BigRat(-1)));
      }
    }
}

TEST_CASE("the class is symmetric under t -> 1/t") {
  std::mt19937 rng(32);
  for (int q : {1, 2, 3})
    for (int i = 0; i < 15; ++i) {
      const SeifertMatrix s = random_seifert(rng, 4, q);
      const LaurentPoly delta = det_laurent(presentation_matrix(s));
      CHECK(AlexanderClass(delta) == AlexanderClass(delta.invert_variable()));
    }
}

TEST_CASE("orientation variants transform the matrix and fix the class") {
  const SeifertMatrix s = S("1,1;0,-1", 3);
  CHECK(reverse(s).matrix() == s.matrix().transposed());
  CHECK(mirror(s).matrix() == -(s.matrix().transposed()));
  CHECK(mirror(reverse(s)).matrix() == -(s.matrix()));

  std::mt19937 rng(33);
  for (int i = 0; i < 40; ++i) {
    const SeifertMatrix r = random_seifert(rng, 4, 3);
    const AlexanderClass cls = alexander_class(r);
    CHECK(alexander_class(reverse(r)) == cls);
    CHECK(alexander_class(mirror(r)) == cls);
    CHECK(alexander_class(mirror(reverse(r))) == cls);
  }
}

TEST_CASE("connected sums multiply Alexander classes") {
  const SeifertMatrix trefoil = S("-1,1;0,-1", 1);
  const SeifertMatrix sum = connected_sum(trefoil, trefoil);
  CHECK(sum.size() == 4);
  CHECK(sum.q() == 1);
  const LaurentPoly square = LaurentPoly::parse("t^2-t+1") * LaurentPoly::parse("t^2-t+1");
  CHECK(alexander_class(sum) == AlexanderClass(square));

  // summing with the unknot changes nothing
  CHECK(alexander_class(connected_sum(trefoil, S("", 1))) == alexander_class(trefoil));

  CHECK_THROWS_AS(connected_sum(trefoil, S("1,1;0,-1", 3)), ParityMismatchError);

  std::mt19937 rng(34);
  for (int i = 0; i < 25; ++i) {
    const SeifertMatrix a = random_seifert(rng, 2, 3), b = random_seifert(rng, 4, 3);
    CHECK(alexander_class(connected_sum(a, b)) ==
          AlexanderClass(det_laurent(presentation_matrix(a)) *
                         det_laurent(presentation_matrix(b))));
  }
}
