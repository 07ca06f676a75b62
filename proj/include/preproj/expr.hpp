#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "preproj/free_element.hpp"
#include "preproj/polynomial.hpp"
#include "preproj/quiver.hpp"
#include "preproj/rational.hpp"

namespace preproj::cli {

/// Syntax or identifier error with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column, std::vector<std::string> expected = {});

  [[nodiscard]] int line() const { return line_; }
  [[nodiscard]] int column() const { return column_; }
  /// Tokens that would have been accepted at the error position (may be empty).
  [[nodiscard]] const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Surface syntax tree. Every node keeps the position of its first token.
struct Expr {
  enum class Kind { Number, Indeterminate, Identifier, Product, Sum, Negation, Group, Power };

  Kind kind = Kind::Number;
  Rational number;                 // Number
  std::string name;                // Indeterminate ("t3"), Identifier ("a0", "x", "e2")
  std::vector<ExprPtr> children;   // Product factors, Sum terms, or the single operand
  std::vector<bool> negated;       // Sum: whether term i is preceded by '-' (false for the first)
  unsigned exponent = 0;           // Power
  int line = 1;
  int column = 1;

  static ExprPtr make_number(Rational r);
  static ExprPtr make_indeterminate(std::string name);
  static ExprPtr make_identifier(std::string name);
  static ExprPtr make_product(std::vector<ExprPtr> factors);
  static ExprPtr make_sum(std::vector<ExprPtr> terms, std::vector<bool> negated);
  static ExprPtr make_negation(ExprPtr operand);
  static ExprPtr make_group(ExprPtr inner);
  static ExprPtr make_power(ExprPtr base, unsigned exponent);
};

/// Structural equality, ignoring source positions.
bool operator==(const Expr& a, const Expr& b);

/// Parses the expression grammar
///   expr := term (("+" | "-") term)* ; term := factor ("*" factor)* ;
///   factor := atom ("^" nat)? ; atom := rational | ident | "(" expr ")" | "-" atom
ExprPtr parse(std::string_view text);

/// Canonical text; parse(print(e)) == e for every tree produced by parse.
std::string print(const Expr& e);

enum class QuiverKind { Unknown, E6, L2 };

/// Quiver the identifiers belong to; e0 fits both. Throws ParseError naming
/// the first identifier that conflicts with an earlier one.
QuiverKind infer_quiver(const Expr& e);

/// Value in the path algebra of `quiver`: rationals and t1..t9 are scalars
/// (multiples of the identity), arrows and idempotents are paths.
FreeElement to_element(const Expr& e, const std::shared_ptr<const Quiver>& quiver);

}  // namespace preproj::cli
