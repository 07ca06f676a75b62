#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "preproj/e6_formulas.hpp"
#include "preproj/free_element.hpp"
#include "preproj/polynomial.hpp"
#include "preproj/quotient.hpp"
#include "preproj/report.hpp"

namespace preproj::e6 {

// ---------------------------------------------------------------------------
// The algebras

/// Mesh relations of the preprojective algebra of type E6, in the order
/// a0*b0, a1*b1, b1*a1 + a2*b2, b0*a0 + b2*a2 + a3*b3, b3*a3 + a4*b4, b4*a4.
RelationSet pe6_relations();
/// x^2, y^3, (x + y)^3 on the two-loop quiver.
RelationSet re6_relations();

/// Fresh builds of P(E6) and R(E6).
std::shared_ptr<const QuotientAlgebra> make_pe6();
std::shared_ptr<const QuotientAlgebra> make_re6();

/// Process-wide shared instances, built on first use.
const std::shared_ptr<const QuotientAlgebra>& pe6();
const std::shared_ptr<const QuotientAlgebra>& re6();

/// Word in the arrows of the E6 quiver ("b0 a0 b2 a2"), or of the two-loop quiver.
FreeElement pe6_word(std::string_view names);
FreeElement re6_word(std::string_view names);

/// The vertex of the E6 quiver at which b0*a0 and b2*a2 are loops.
inline constexpr Vertex kLoopVertex = 3;

// ---------------------------------------------------------------------------
// Deformation parameters

enum class ParameterMode { SymbolicConstrained, SymbolicFree, Numeric };

/// Coefficients theta1..theta9 of
///   f = t1 xy + t2 yx + t3 yy + t4 xyx + t5 xyy + t6 yxy + t7 xyxy + t8 yxyy + t9 xyxyy.
struct DeformationParameters {
  Theta<Polynomial> theta;
  ParameterMode mode = ParameterMode::SymbolicFree;

  /// theta_k = t_k for all k.
  static DeformationParameters symbolic_free();
  /// theta2 = 2 t3 - t1 and theta6 = 2 t5 - 3 t4 - 3 (t3 - t1)^2, the rest free.
  static DeformationParameters symbolic_constrained();
  static DeformationParameters numeric(const std::array<Rational, 9>& values);
  static DeformationParameters zero() { return numeric({}); }

  /// theta1 + theta2 - 2 theta3.
  [[nodiscard]] Polynomial first_condition() const;
  /// 3 theta4 - 2 theta5 + theta6 + theta1^2 - theta1 theta2 + theta2^2 - theta3^2.
  [[nodiscard]] Polynomial second_condition() const;
  /// Both conditions vanish identically.
  [[nodiscard]] bool satisfies_constraints() const;

  /// f as an element of the path algebra of the two-loop quiver.
  [[nodiscard]] FreeElement element() const;
};

/// The two constraint substitutions t2 -> 2 t3 - t1, t6 -> 2 t5 - 3 t4 - 3 (t3 - t1)^2.
std::map<Indeterminate, Polynomial> lemma_constraints();

/// The two residual coefficients with all nine theta free.
Polynomial first_condition_free();
Polynomial second_condition_free();

// ---------------------------------------------------------------------------
// Admissibility

/// Normal form of (x + y + f(x, y))^3 in R(E6).
QuotientElement admissibility_residual(const DeformationParameters& f);
bool is_admissible(const DeformationParameters& f);

struct LemmaOptions {
  /// Substitution used in the vanishing check; replaced in mutation tests.
  std::map<Indeterminate, Polynomial> constraints = lemma_constraints();
};

/// L1 residual formula, L2 vanishing under the constraints, L3 rewriting of
/// the second coefficient.
VerificationReport verify_lemma(const LemmaOptions& options = {});

/// The four rewriting chains of the basis argument in R(E6).
VerificationReport verify_rewriting_identities();

// ---------------------------------------------------------------------------
// Change of generators

DerivedConstants<Polynomial> derived_constants(const DeformationParameters& f);

/// Map on the E6 quiver sending a2..b4 to their primed versions and every
/// other arrow to itself. In numeric mode the constraints must hold.
GeneratorMap substituted_generators(const DeformationParameters& f);

/// Primed generators as free elements (symbolic instantiation of the formulas).
PrimedGenerators<FreeElement> primed_generators(const DeformationParameters& f);

/// The seven relations of the deformed algebra, with f expanded through the
/// map x -> b0*a0, y -> b2*a2.
std::vector<FreeElement> deformed_relations(const DeformationParameters& f);

/// Map from the two-loop quiver: x -> x_image, y -> y_image, vertex 0 -> kLoopVertex.
GeneratorMap loop_embedding(const FreeElement& x_image, const FreeElement& y_image);

/// Normal forms in P(E6) of the seven deformed relations under the change of generators.
std::vector<QuotientElement> theorem_residuals(const DeformationParameters& f);

VerificationReport verify_theorem(const DeformationParameters& f = DeformationParameters::symbolic_constrained());

VerificationReport verify_inverse(InverseMode mode,
                                  const DeformationParameters& f = DeformationParameters::symbolic_constrained());

/// Every displayed equality of the proof, left minus right reduced in P(E6)
/// (or R(E6) for the basis argument).
VerificationReport verify_paper_identities();

/// C1 corner dimension, C2 vanishing of the relation images, C3 injectivity
/// of R(E6) -> e3 P(E6) e3 on the basis words.
VerificationReport corner_iso_check();

// ---------------------------------------------------------------------------
// Numeric cross-check

enum class SampleField { Rationals, Prime2, Prime3, Prime5, Prime7, Prime11 };

/// Parses "0"/"q" (rationals) or one of the primes 2, 3, 5, 7, 11.
SampleField sample_field_from_prime(std::optional<std::uint32_t> prime);
std::string to_string(SampleField field);

/// Re-evaluates the admissibility residual and the seven theorem residuals at
/// random constrained points through dense structure-constant arithmetic,
/// and compares every coordinate with the evaluated symbolic residuals.
VerificationReport sample_check(std::uint64_t seed, std::size_t trials, SampleField field);

/// Same, at one explicit numeric point; throws std::invalid_argument before
/// any evaluation if the constraints fail (in the chosen field).
VerificationReport sample_check(const std::array<Rational, 9>& theta, SampleField field);

}  // namespace preproj::e6
