#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "preproj/e6.hpp"
#include "preproj/expr.hpp"
#include "support/generators.hpp"

namespace preproj::cli {
namespace {

using preproj::testing::Gen;
using preproj::testing::kCases;

const std::vector<std::string> kE6Identifiers = {"a0", "a1", "a2", "a3", "a4", "b0", "b1", "b2",
                                                 "b3", "b4", "e0", "e1", "e2", "e3", "e4", "e5"};
const std::vector<std::string> kL2Identifiers = {"x", "y", "e0"};

ParseError parse_error(std::string_view text) {
  try {
    (void)parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for '" << text << "'";
  return ParseError("", 0, 0);
}

bool expects(const ParseError& e, const std::string& token) {
  for (const auto& t : e.expected()) {
    if (t == token) return true;
  }
  return false;
}

TEST(Parse, RelationAtBranchVertex) {
  const ExprPtr e = parse("b0*a0 + b2*a2 + a3*b3");
  ASSERT_EQ(e->kind, Expr::Kind::Sum);
  ASSERT_EQ(e->children.size(), 3u);
  for (const auto& term : e->children) {
    ASSERT_EQ(term->kind, Expr::Kind::Product);
    ASSERT_EQ(term->children.size(), 2u);
    EXPECT_EQ(term->children[0]->kind, Expr::Kind::Identifier);
  }
  EXPECT_EQ(e->children[2]->children[1]->name, "b3");
  EXPECT_EQ(infer_quiver(*e), QuiverKind::E6);
}

TEST(Parse, CubeOfSum) {
  const ExprPtr e = parse("(x+y)^3");
  ASSERT_EQ(e->kind, Expr::Kind::Power);
  EXPECT_EQ(e->exponent, 3u);
  ASSERT_EQ(e->children[0]->kind, Expr::Kind::Group);
  EXPECT_EQ(e->children[0]->children[0]->kind, Expr::Kind::Sum);
  EXPECT_EQ(print(*e), "(x + y)^3");
}

TEST(Parse, CrossQuiverIdentifiersRejected) {
  const ParseError e = parse_error("a0 + x");
  EXPECT_NE(std::string(e.what()).find("identifiers from different quivers"), std::string::npos);
  EXPECT_EQ(e.line(), 1);
  EXPECT_EQ(e.column(), 6);
}

TEST(Parse, VertexIdempotentFitsBothQuivers) {
  EXPECT_EQ(infer_quiver(*parse("e0 + x")), QuiverKind::L2);
  EXPECT_EQ(infer_quiver(*parse("e0 + a0*b0")), QuiverKind::E6);
  EXPECT_EQ(infer_quiver(*parse("3/2*t4")), QuiverKind::Unknown);
}

TEST(Parse, RationalsAndIndeterminates) {
  const ExprPtr e = parse("-3/6*t2^2");
  ASSERT_EQ(e->kind, Expr::Kind::Product);
  EXPECT_EQ(e->children[0]->kind, Expr::Kind::Negation);
  EXPECT_EQ(e->children[0]->children[0]->number, Rational(1, 2));
  EXPECT_EQ(e->children[1]->kind, Expr::Kind::Power);
  EXPECT_EQ(e->children[1]->children[0]->kind, Expr::Kind::Indeterminate);
}

TEST(ParseErrors, UnclosedGroup) {
  const ParseError e = parse_error("(x+y");
  EXPECT_EQ(e.line(), 1);
  EXPECT_EQ(e.column(), 5);
  EXPECT_TRUE(expects(e, "')'"));
  EXPECT_STREQ(e.what(), "line 1, column 5: expected '+', '-', '*', '^', ')', found end of input");
}

TEST(ParseErrors, JuxtapositionNeedsStar) {
  const ParseError e = parse_error("x y");
  EXPECT_EQ(e.column(), 3);
  EXPECT_TRUE(expects(e, "'*'"));
}

TEST(ParseErrors, UnknownIdentifierOnSecondLine) {
  const ParseError e = parse_error("x +\n  q");
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(e.column(), 3);
  EXPECT_NE(std::string(e.what()).find("unknown identifier 'q'"), std::string::npos);
  EXPECT_EQ(parse_error("t10").column(), 1);
  EXPECT_EQ(parse_error("a5").column(), 1);
}

TEST(ParseErrors, MissingOperand) {
  const ParseError e = parse_error("x + ");
  EXPECT_EQ(e.column(), 5);
  EXPECT_FALSE(e.expected().empty());
  EXPECT_EQ(parse_error("").line(), 1);
  EXPECT_EQ(parse_error("x^").column(), 3);
  EXPECT_EQ(parse_error("2/0").column(), 3);
  EXPECT_EQ(parse_error("x # y").column(), 3);
}

TEST(ToElement, CubeInLocalAlgebra) {
  const auto q = builtin_quiver(BuiltinQuiver::L2);
  EXPECT_EQ(to_element(*parse("(x+y)^3"), q), pow(e6::re6_word("x") + e6::re6_word("y"), 3));
  EXPECT_EQ(to_element(*parse("x^0"), q), FreeElement::one(q));
}

TEST(ToElement, ScalarsAndIdempotents) {
  const auto q = builtin_quiver(BuiltinQuiver::E6);
  EXPECT_EQ(to_element(*parse("(t1 - t3)*b3*b0*a0"), q), (t(1) - t(3)) * e6::pe6_word("b3 b0 a0"));
  EXPECT_EQ(to_element(*parse("e3*b0 - b0"), q), FreeElement(q));
  EXPECT_EQ(to_element(*parse("2"), q), Polynomial(2) * FreeElement::one(q));
  EXPECT_THROW((void)to_element(*parse("e3"), builtin_quiver(BuiltinQuiver::L2)), ParseError);
}

TEST(Print, CanonicalSpacing) {
  EXPECT_EQ(print(*parse("x+ -y*2")), "x + -y*2");
  EXPECT_EQ(print(*parse("  b0*a0-b2*a2 ")), "b0*a0 - b2*a2");
}

TEST(GrammarProperty, ParsePrintRoundTrip) {
  Gen g(601);
  for (int k = 0; k < kCases; ++k) {
    const auto& ids = k % 2 ? kE6Identifiers : kL2Identifiers;
    const ExprPtr tree = g.expr(ids, 3);
    const std::string text = print(*tree);
    ExprPtr again;
    ASSERT_NO_THROW(again = parse(text)) << text;
    EXPECT_TRUE(*again == *tree) << text;
    EXPECT_EQ(print(*again), text);
  }
}

TEST(GrammarProperty, ElementTextRoundTrip) {
  Gen g(602);
  for (int k = 0; k < kCases; ++k) {
    const auto q = builtin_quiver(k % 2 ? BuiltinQuiver::E6 : BuiltinQuiver::L2);
    const FreeElement e = g.element(q, 4, 5, true);
    const std::string text = e.to_string();
    EXPECT_EQ(to_element(*parse(text), q), e) << text;
  }
}

}  // namespace
}  // namespace preproj::cli
