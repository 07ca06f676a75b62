#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "preproj/e6.hpp"
#include "preproj/numeric.hpp"
#include "support/certificates.hpp"
#include "support/generators.hpp"

namespace preproj::e6 {
namespace {

using preproj::testing::Gen;
using preproj::testing::kCases;

std::array<Rational, 9> constrained_point(Gen& g) {
  std::array<Rational, 9> v;
  for (std::size_t k : {0, 2, 3, 4, 6, 7, 8}) v[k] = g.rational();
  const Rational d31 = v[2] - v[0];
  v[1] = Rational(2) * v[2] - v[0];
  v[5] = Rational(2) * v[4] - Rational(3) * v[3] - Rational(3) * d31 * d31;
  return v;
}

Assignment<Rational> as_assignment(const std::array<Rational, 9>& v) {
  Assignment<Rational> a;
  for (int k = 1; k <= 9; ++k) a[Indeterminate(k)] = v[static_cast<std::size_t>(k - 1)];
  return a;
}

std::set<std::string> failing(const VerificationReport& r) {
  std::set<std::string> out;
  for (const auto& c : r.checks) {
    if (!c.passed) out.insert(c.name);
  }
  return out;
}

const ReportNote* find_note(const VerificationReport& r, std::string_view prefix) {
  for (const auto& n : r.notes) {
    if (n.name.starts_with(prefix)) return &n;
  }
  return nullptr;
}

std::size_t index_of(const QuotientAlgebra& a, std::string_view word) {
  const FreeElement e = a.quiver().arrows().size() == 2 ? re6_word(word) : pe6_word(word);
  return *a.basis_index(e.terms().begin()->first);
}

// --- algebras ---------------------------------------------------------------

TEST(MakePe6, RelationsVanishAndLoopSquares) {
  for (const auto& r : pe6_relations().relations) EXPECT_TRUE(pe6()->normal_form(r).is_zero());
  EXPECT_TRUE(pe6()->normal_form(pe6_word("b0 a0 b0 a0")).is_zero());
}

TEST(MakePe6, CornerDimensions) {
  // The 12-dimensional corner sits at the vertex carrying b0*a0 and b2*a2.
  EXPECT_EQ(pe6()->dimension_at(kLoopVertex, kLoopVertex), 12u);
  EXPECT_EQ(pe6()->dimension_at(0, 0), 4u);
}

TEST(MakeRe6, DimensionAndNilpotency) {
  EXPECT_EQ(re6()->dimension(), 12u);
  EXPECT_EQ(re6()->nilpotency_degree(), 6u);
  EXPECT_NE(re6()->normal_form(re6_word("x y")), re6()->normal_form(re6_word("y x")));
}

// --- admissibility --------------------------------------------------------

TEST(Admissibility, ZeroDeformation) {
  EXPECT_TRUE(admissibility_residual(DeformationParameters::zero()).is_zero());
  EXPECT_TRUE(is_admissible(DeformationParameters::zero()));
}

TEST(Admissibility, FreeResidualHasTwoCoordinates) {
  const QuotientElement r = admissibility_residual(DeformationParameters::symbolic_free());
  const auto& a = *re6();
  ASSERT_EQ(r.coordinates().size(), 2u);
  EXPECT_EQ(r.coordinate(index_of(a, "x y x y")), t(1) + t(2) - Polynomial(2) * t(3));
  EXPECT_EQ(r.coordinate(index_of(a, "x y x y y")), Polynomial(3) * t(4) - Polynomial(2) * t(5) + t(6) +
                                                        t(1) * t(1) - t(1) * t(2) + t(2) * t(2) - t(3) * t(3));
  EXPECT_EQ(r.coordinate(index_of(a, "x y x y")), first_condition_free());
  EXPECT_EQ(r.coordinate(index_of(a, "x y x y y")), second_condition_free());
}

TEST(Admissibility, NumericConstrainedPoint) {
  const auto f = DeformationParameters::numeric({1, -1, 0, 0, 0, -3, 0, 0, 0});
  EXPECT_TRUE(admissibility_residual(f).is_zero());
  // Cross-check by cubing through the structure constants.
  const NumericAlgebra<Rational> alg(re6());
  const auto x = DenseElement<Rational>::arrow(alg, "x");
  const auto y = DenseElement<Rational>::arrow(alg, "y");
  const auto s = x + y + x * y - y * x - Rational(3) * (y * x * y);
  EXPECT_TRUE((s * s * s).is_zero());
}

TEST(Admissibility, SingleProductIsNotAdmissible) {
  EXPECT_FALSE(is_admissible(DeformationParameters::numeric({1, 0, 0, 0, 0, 0, 0, 0, 0})));
  EXPECT_TRUE(is_admissible(DeformationParameters::symbolic_constrained()));
  EXPECT_FALSE(is_admissible(DeformationParameters::symbolic_free()));
}

TEST(Admissibility, RandomConstrainedPointsAreAdmissible) {
  Gen g(501);
  for (int k = 0; k < 5; ++k) EXPECT_TRUE(is_admissible(DeformationParameters::numeric(constrained_point(g))));
}

TEST(VerifyLemma, AllThreePass) {
  const VerificationReport r = verify_lemma();
  EXPECT_EQ(r.checks.size(), 3u);
  EXPECT_TRUE(r.passed());
}

TEST(VerifyLemma, CorruptedConstraintFailsL2) {
  LemmaOptions options;
  options.constraints[Indeterminate(2)] = Polynomial(2) * t(3);
  const VerificationReport r = verify_lemma(options);
  ASSERT_EQ(r.checks.size(), 3u);
  EXPECT_TRUE(r.checks[0].passed);
  EXPECT_FALSE(r.checks[1].passed);
  ASSERT_TRUE(r.checks[1].residual.has_value());
  EXPECT_FALSE(r.checks[1].residual->empty());
}

TEST(VerifyLemma, RewritingChains) {
  const VerificationReport r = verify_rewriting_identities();
  EXPECT_EQ(r.checks.size(), 4u);
  EXPECT_TRUE(r.passed());
}

// --- derived constants and the change of generators ------------------------

TEST(DerivedConstants, VanishAtZero) {
  const auto c = derived_constants(DeformationParameters::zero());
  for (const Polynomial* p : {&c.alpha, &c.beta, &c.gamma, &c.delta, &c.alpha1, &c.beta1, &c.alpha2, &c.beta2,
                              &c.alpha3}) {
    EXPECT_TRUE(p->is_zero());
  }
}

TEST(DerivedConstants, AlphaAtDiagonalPoint) {
  // t1 = t3 = 2, t4 = 1, t5 = 0; t2 and t6 follow from the constraints.
  const auto c = derived_constants(DeformationParameters::numeric({2, 2, 2, 1, 0, -3, 0, 0, 0}));
  EXPECT_EQ(c.alpha, Polynomial(1));
}

TEST(DerivedConstants, DefiningIdentities) {
  const auto f = DeformationParameters::symbolic_constrained();
  const auto c = derived_constants(f);
  EXPECT_EQ(c.alpha1 + c.alpha, t(1) * t(3) - t(3) * t(3));
  EXPECT_EQ(c.beta1 + c.beta, t(1) * t(3) - t(3) * t(3));
  EXPECT_EQ(c.alpha, t(4) + (t(3) - t(1)) * (t(3) - t(1)));
}

TEST(DerivedConstants, NumericAndSymbolicInstantiationsAgree) {
  Gen g(502);
  const auto sym = derived_constants(DeformationParameters::symbolic_constrained());
  for (int k = 0; k < kCases; ++k) {
    const auto v = constrained_point(g);
    const auto num = derived_constants<Rational>(v);
    const auto at = as_assignment(v);
    EXPECT_EQ(num.gamma, evaluate(sym.gamma, at));
    EXPECT_EQ(num.delta, evaluate(sym.delta, at));
    EXPECT_EQ(num.alpha3, evaluate(sym.alpha3, at));
  }
}

TEST(SubstitutedGenerators, IdentityAtZero) {
  const GeneratorMap m = substituted_generators(DeformationParameters::zero());
  const auto& q = pe6()->quiver();
  for (ArrowId id = 0; id < q.arrows().size(); ++id) {
    EXPECT_EQ(m.image(id), FreeElement(pe6()->quiver_ptr(), q.arrow_path(id))) << q.arrow(id).name;
  }
}

TEST(SubstitutedGenerators, PrimedA2) {
  const auto g = primed_generators(DeformationParameters::symbolic_constrained());
  EXPECT_EQ(g.a2, pe6_word("a2") - t(8) * pe6_word("a2 b0 a0 b2 a2 b2 a2"));
}

TEST(SubstitutedGenerators, LeadingTermsPreserved) {
  const GeneratorMap m = substituted_generators(DeformationParameters::symbolic_constrained());
  const auto& q = pe6()->quiver();
  for (ArrowId id = 0; id < q.arrows().size(); ++id) {
    const FreeElement arrow(pe6()->quiver_ptr(), q.arrow_path(id));
    const FreeElement tail = m.image(id) - arrow;
    EXPECT_EQ(m.image(id).coefficient(q.arrow_path(id)), Polynomial(1));
    if (!tail.is_zero()) {
      EXPECT_GT(tail.min_length(), 1u) << q.arrow(id).name;
    }
  }
  const auto g = primed_generators(DeformationParameters::symbolic_constrained());
  EXPECT_EQ(g.b3.coefficient(q.path_of({"b3"})), Polynomial(1));
  EXPECT_EQ(g.b3.coefficient(q.path_of({"b3", "b0", "a0"})), t(3) - t(1));
}

TEST(SubstitutedGenerators, NumericConstraintViolationThrows) {
  EXPECT_THROW((void)substituted_generators(DeformationParameters::numeric({1, 0, 0, 0, 0, 0, 0, 0, 0})),
               std::invalid_argument);
}

TEST(DeformedRelations, ZeroDeformation) {
  const auto rels = deformed_relations(DeformationParameters::zero());
  ASSERT_EQ(rels.size(), 7u);
  const auto mesh = pe6_relations().relations;
  EXPECT_EQ(rels[0], mesh[0]);
  EXPECT_EQ(rels[1], mesh[1]);
  EXPECT_EQ(rels[2], mesh[2]);
  EXPECT_EQ(rels[3], mesh[4]);
  EXPECT_EQ(rels[4], mesh[5]);
  EXPECT_EQ(rels[5], mesh[3]);
  EXPECT_EQ(rels[6], pow(pe6_word("b0 a0") + pe6_word("b2 a2"), 3));
}

TEST(DeformedRelations, LeadingCoefficientOfF) {
  const auto rels = deformed_relations(DeformationParameters::symbolic_free());
  EXPECT_EQ(rels[5].coefficient(pe6()->quiver().path_of({"b0", "a0", "b2", "a2"})), t(1));
  for (const auto& r : rels) EXPECT_TRUE(r.is_endpoint_homogeneous()) << r.to_string();
}

// --- main verification ----------------------------------------------------

TEST(VerifyTheorem, SevenOfSevenSymbolically) {
  const VerificationReport r = verify_theorem();
  EXPECT_EQ(r.checks.size(), 7u);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.integer_certificate, std::optional<bool>(true));
  for (const auto& res : theorem_residuals(DeformationParameters::symbolic_constrained())) EXPECT_TRUE(res.is_zero());
}

TEST(VerifyTheorem, TrivialAtZero) {
  EXPECT_TRUE(verify_theorem(DeformationParameters::zero()).passed());
}

TEST(VerifyTheorem, FailsWithoutConstraints) {
  // With all nine parameters free, f is not admissible and the change of generators cannot work.
  EXPECT_FALSE(verify_theorem(DeformationParameters::symbolic_free()).passed());
}

TEST(VerifyTheorem, NumericResidualsMatchEvaluatedSymbolicOnes) {
  Gen g(503);
  const auto symbolic = theorem_residuals(DeformationParameters::symbolic_constrained());
  for (int k = 0; k < 20; ++k) {
    const auto v = constrained_point(g);
    const auto numeric = theorem_residuals(DeformationParameters::numeric(v));
    ASSERT_EQ(numeric.size(), symbolic.size());
    for (std::size_t i = 0; i < numeric.size(); ++i) {
      EXPECT_EQ(numeric[i], testing::evaluate(symbolic[i], as_assignment(v)));
      EXPECT_TRUE(numeric[i].is_zero());
    }
  }
}

// --- inverse --------------------------------------------------------------

TEST(VerifyInverse, AtZero) {
  EXPECT_TRUE(verify_inverse(InverseMode::Corrected, DeformationParameters::zero()).passed());
  // a4'*a2' does not compose, so the printed a4 formula fails even here.
  const auto printed = verify_inverse(InverseMode::AsPrinted, DeformationParameters::zero());
  EXPECT_EQ(failing(printed), std::set<std::string>{"a4 recovered from the primed generators"});
  EXPECT_EQ(printed.checks[4].residual, std::optional<std::string>("- a4"));
}

TEST(VerifyInverse, CorrectedModeMismatchIsTheA3Formula) {
  const VerificationReport r = verify_inverse(InverseMode::Corrected);
  EXPECT_EQ(r.checks.size(), 6u);
  EXPECT_EQ(failing(r), std::set<std::string>{"a3 recovered from the primed generators"});
  const ReportNote* note = find_note(r, "a3 constants");
  ASSERT_NE(note, nullptr);
  EXPECT_NE(note->detail.find("alpha2"), std::string::npos);
}

TEST(VerifyInverse, PrintedModeMismatchesAreA3AndA4) {
  const VerificationReport r = verify_inverse(InverseMode::AsPrinted);
  EXPECT_EQ(failing(r), (std::set<std::string>{"a3 recovered from the primed generators",
                                               "a4 recovered from the primed generators"}));
  EXPECT_NE(find_note(r, "a4 formula"), nullptr);
  EXPECT_NE(find_note(r, "a3 formula"), nullptr);
}

TEST(VerifyInverse, MismatchesAreStableAcrossRuns) {
  for (const InverseMode mode : {InverseMode::AsPrinted, InverseMode::Corrected}) {
    const auto first = verify_inverse(mode);
    const auto second = verify_inverse(mode);
    ASSERT_EQ(first.checks.size(), second.checks.size());
    for (std::size_t i = 0; i < first.checks.size(); ++i) {
      EXPECT_EQ(first.checks[i].residual, second.checks[i].residual);
    }
  }
}

TEST(VerifyInverse, PrintedTypoInA3IsHarmless) {
  const auto printed = verify_inverse(InverseMode::AsPrinted);
  const auto corrected = verify_inverse(InverseMode::Corrected);
  EXPECT_EQ(printed.checks[2].residual, corrected.checks[2].residual);
}

// Independent oracle: the inverse formulas composed with the primed
// generators through dense structure-constant arithmetic only.
TEST(VerifyInverse, DenseOracleAgrees) {
  const NumericAlgebra<Rational> alg(pe6());
  using Dense = DenseElement<Rational>;
  const Resolver<Dense> arrow = [&alg](std::string_view n) { return Dense::arrow(alg, n); };
  Gen g(504);
  int a3_mismatches = 0;
  for (int k = 0; k < 10; ++k) {
    const auto v = constrained_point(g);
    const auto primed = primed_generators<Dense, Rational>(v, arrow);
    const auto rhs = inverse_right_hand_sides<Dense, Rational>(v, inverse_resolver(primed, arrow), InverseMode::Corrected);
    for (std::size_t i = 0; i < kChangedArrows.size(); ++i) {
      const bool recovered = rhs[i] == arrow(kChangedArrows[i]);
      if (kChangedArrows[i] == "a3") {
        a3_mismatches += recovered ? 0 : 1;
      } else {
        EXPECT_TRUE(recovered) << kChangedArrows[i];
      }
    }
  }
  EXPECT_GT(a3_mismatches, 0);
}

// --- identity catalog and corner ------------------------------------------

TEST(VerifyIdentities, CatalogAsPrinted) {
  const VerificationReport r = verify_paper_identities();
  EXPECT_EQ(r.checks.size(), 36u);
  EXPECT_EQ(r.pass_count(), 33u);
  const std::set<std::string> expected = {"b3*b2*a2*b0*a0*b2*a2*a3 = ... = b3*b0*a0*b2*a2*b0*a0*a3",
                                          "b3'*a3' expansion", "a3'*b3' expansion"};
  EXPECT_EQ(failing(r), expected);
  for (const auto& name : expected) {
    const ReportNote* note = find_note(r, name);
    ASSERT_NE(note, nullptr) << name;
    EXPECT_TRUE(note->detail.starts_with("misprint: ")) << note->detail;
    EXPECT_TRUE(note->detail.ends_with("the chain holds")) << note->detail;
  }
  EXPECT_EQ(r.integer_certificate, std::optional<bool>(true));
}

TEST(VerifyIdentities, SixteenBlockExamplesAndFinalSum) {
  const VerificationReport r = verify_paper_identities();
  std::set<std::string> passed;
  for (const auto& c : r.checks) {
    if (c.passed) passed.insert(c.name);
  }
  EXPECT_TRUE(passed.contains("b0*a0*a3*b3 = -b0*a0*b2*a2"));
  EXPECT_TRUE(passed.contains("b2*a2*b0*a0*a3*b3 = -b2*a2*b0*a0*b2*a2"));
  EXPECT_TRUE(passed.contains("b0*a0 + b2'*a2' + a3'*b3' + f(b0*a0, b2'*a2') = b0*a0 + b2*a2 + a3*b3 = 0"));
  EXPECT_TRUE(passed.contains("a2'*b2' = a2*b2"));
  EXPECT_TRUE(passed.contains("b4'*a4' = 0"));
  EXPECT_TRUE(passed.contains("b3'*a3' + a4'*b4' = 0"));
}

TEST(CornerIso, AllChecksPass) {
  const VerificationReport r = corner_iso_check();
  EXPECT_EQ(r.checks.size(), 3u);
  EXPECT_TRUE(r.passed());
  EXPECT_NE(find_note(r, "corner vertex"), nullptr);
}

TEST(CornerIso, CubeOfLoopSumVanishes) {
  EXPECT_TRUE(pe6()->normal_form(pow(pe6_word("b0 a0") + pe6_word("b2 a2"), 3)).is_zero());
}

// --- numeric sampling -----------------------------------------------------

TEST(SampleCheck, TwentyRationalPoints) {
  const VerificationReport r = sample_check(1, 20, SampleField::Rationals);
  EXPECT_EQ(r.checks.size(), 20u);
  EXPECT_TRUE(r.passed());
}

TEST(SampleCheck, TenPointsOverEachPrimeField) {
  for (const std::uint32_t p : {5u, 7u, 11u}) {
    const VerificationReport r = sample_check(p, 10, sample_field_from_prime(p));
    EXPECT_EQ(r.checks.size(), 10u);
    EXPECT_TRUE(r.passed()) << p;
  }
}

TEST(SampleCheck, ConstraintViolationIsRejectedUpFront) {
  EXPECT_THROW((void)sample_check({1, 0, 0, 0, 0, 0, 0, 0, 0}, SampleField::Rationals), std::invalid_argument);
  EXPECT_THROW((void)sample_check({0, 0, 0, 0, 0, 1, 0, 0, 0}, SampleField::Prime5), std::invalid_argument);
  EXPECT_TRUE(sample_check({1, -1, 0, 0, 0, -3, 0, 0, 0}, SampleField::Rationals).passed());
}

TEST(SampleCheck, FieldSelection) {
  EXPECT_EQ(sample_field_from_prime(std::nullopt), SampleField::Rationals);
  EXPECT_EQ(to_string(sample_field_from_prime(7)), "GF(7)");
  EXPECT_EQ(to_string(SampleField::Rationals), "Q");
  EXPECT_THROW((void)sample_field_from_prime(4), std::invalid_argument);
}

}  // namespace
}  // namespace preproj::e6
