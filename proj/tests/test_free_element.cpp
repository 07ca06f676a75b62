#include <stdexcept>

#include <gtest/gtest.h>

#include "preproj/e6.hpp"
#include "preproj/free_element.hpp"
#include "support/generators.hpp"

namespace preproj {
namespace {

using testing::Gen;
using testing::kCases;

const std::shared_ptr<const Quiver>& e6q() {
  static const auto q = builtin_quiver(BuiltinQuiver::E6);
  return q;
}
const std::shared_ptr<const Quiver>& l2q() {
  static const auto q = builtin_quiver(BuiltinQuiver::L2);
  return q;
}
FreeElement w(std::string_view names) { return FreeElement::word(e6q(), names); }
FreeElement lw(std::string_view names) { return FreeElement::word(l2q(), names); }

GeneratorMap loops_map() { return e6::loop_embedding(w("b0 a0"), w("b2 a2")); }

TEST(FeAdd, VertexTwoRelation) {
  const FreeElement r = w("b1 a1") + w("a2 b2");
  EXPECT_EQ(r.to_string(), "b1*a1 + a2*b2");
  EXPECT_TRUE(r.is_endpoint_homogeneous());
  EXPECT_EQ(r, e6::pe6_relations().relations[2]);
}

TEST(FeAdd, InverseAndZero) {
  const FreeElement a = w("b0 a0") + t(3) * w("b2 a2");
  EXPECT_TRUE((a + Polynomial(-1) * a).is_zero());
  EXPECT_EQ(FreeElement(e6q()) + a, a);
}

TEST(FeAdd, QuiverMismatchThrows) {
  EXPECT_THROW((void)(w("a0") + lw("x")), std::invalid_argument);
  EXPECT_THROW((void)(w("a0") * lw("x")), std::invalid_argument);
}

TEST(FeMul, LoopAtZero) {
  const FreeElement p = w("a0") * w("b0");
  EXPECT_EQ(p, w("a0 b0"));
  const Path& path = p.terms().begin()->first;
  EXPECT_EQ(path.source, 0);
  EXPECT_EQ(path.target, 0);
}

TEST(FeMul, NonComposableIsZero) {
  EXPECT_TRUE((w("a1") * w("a0")).is_zero());
  EXPECT_TRUE(w("a2 a1").is_zero());
}

TEST(FeMul, LengthFourLoop) {
  const FreeElement p = w("b0 a0") * w("b2 a2");
  EXPECT_EQ(p.to_string(), "b0*a0*b2*a2");
  EXPECT_EQ(p.terms().begin()->first.source, 3);
}

TEST(FeMul, PolynomialCoefficientsMultiply) {
  const FreeElement a = (t(1) - t(3)) * w("b3");
  const FreeElement b = t(2) * w("b0 a0");
  EXPECT_EQ((a * b).coefficient(e6q()->path_of({"b3", "b0", "a0"})), (t(1) - t(3)) * t(2));
}

TEST(FeSubstitute, LoopArgumentsInOrder) {
  EXPECT_EQ(substitute(loops_map(), lw("x y")), w("b0 a0 b2 a2"));
}

TEST(FeSubstitute, IdentityMap) {
  const FreeElement e = w("b0 a0 b2 a2") - t(4) * w("a3 b3") + FreeElement::idempotent(e6q(), 1);
  EXPECT_EQ(substitute(GeneratorMap::identity(e6q()), e), e);
}

TEST(FeSubstitute, SquareOfX) {
  EXPECT_EQ(substitute(loops_map(), lw("x x")), w("b0 a0 b0 a0"));
  EXPECT_EQ(substitute(loops_map(), FreeElement::one(l2q())), FreeElement::idempotent(e6q(), 3));
}

TEST(FeSubstitute, UnboundArrowNamed) {
  GeneratorMap m(l2q(), e6q(), {{0, 3}});
  m.bind("x", w("b0 a0"));
  try {
    (void)substitute(m, lw("x y"));
    FAIL() << "expected an error";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("y"), std::string::npos);
  }
}

TEST(GeneratorMap, RejectsNonParallelImages) {
  GeneratorMap m(l2q(), e6q(), {{0, 3}});
  EXPECT_THROW(m.bind("x", w("a0")), std::invalid_argument);
  EXPECT_THROW(m.bind("x", w("b0 a0") + w("a3")), std::invalid_argument);
}

TEST(FreeElement, OneIsTwoSidedIdentity) {
  Gen g(301);
  const FreeElement one = FreeElement::one(e6q());
  for (int k = 0; k < kCases; ++k) {
    const FreeElement a = g.element(e6q(), 4, 5, true);
    EXPECT_EQ(one * a, a);
    EXPECT_EQ(a * one, a);
  }
}

TEST(FreeElement, PrintsInPathOrder) {
  const FreeElement e = lw("y x y") + lw("x y y") + lw("x y x");
  EXPECT_EQ((Polynomial(-1) * e).to_string(), "- x*y*x - x*y*y - y*x*y");
  EXPECT_EQ(((t(1) - t(3)) * w("b3 b0 a0")).to_string(), "(t1 - t3)*b3*b0*a0");
}

TEST(FreeElementProperty, MultiplicationAssociativeAndDistributive) {
  Gen g(302);
  for (int k = 0; k < kCases; ++k) {
    const FreeElement a = g.element(e6q(), 3, 3, true);
    const FreeElement b = g.element(e6q(), 3, 3, true);
    const FreeElement c = g.element(e6q(), 3, 3, true);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) * c, a * c + b * c);
  }
}

TEST(FreeElementProperty, SubstitutionIsAlgebraHomomorphism) {
  Gen g(303);
  const GeneratorMap m = loops_map();
  for (int k = 0; k < kCases; ++k) {
    const FreeElement a = g.element(l2q(), 3, 3, true);
    const FreeElement b = g.element(l2q(), 3, 3, true);
    EXPECT_EQ(substitute(m, a * b), substitute(m, a) * substitute(m, b));
    EXPECT_EQ(substitute(m, a + b), substitute(m, a) + substitute(m, b));
  }
}

TEST(FreeElementProperty, ChangeOfGeneratorsIsHomomorphism) {
  Gen g(304);
  const GeneratorMap m = e6::substituted_generators(e6::DeformationParameters::symbolic_constrained());
  for (int k = 0; k < kCases; ++k) {
    const FreeElement a = g.element(e6q(), 2, 2, false);
    const FreeElement b = g.element(e6q(), 2, 2, false);
    EXPECT_EQ(substitute(m, a * b), substitute(m, a) * substitute(m, b));
    EXPECT_EQ(substitute(m, a - b), substitute(m, a) - substitute(m, b));
  }
}

}  // namespace
}  // namespace preproj
