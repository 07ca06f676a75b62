#include "preproj/e6.hpp"

namespace preproj::e6 {

namespace {

std::optional<std::string> zero_or_residual(const QuotientElement& e) {
  if (e.is_zero()) return std::nullopt;
  return e.to_string();
}

std::optional<std::string> equal_or_difference(const Polynomial& lhs, const Polynomial& rhs) {
  const Polynomial d = lhs - rhs;
  if (d.is_zero()) return std::nullopt;
  return d.to_string();
}

// Every consecutive pair of a displayed chain a = b = c = ... must agree in R(E6).
std::optional<std::string> chain_holds(const std::vector<FreeElement>& chain) {
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    const QuotientElement d = re6()->normal_form(chain[k] - chain[k + 1]);
    if (!d.is_zero()) return "link " + std::to_string(k + 1) + ": " + d.to_string();
  }
  return std::nullopt;
}

}  // namespace

VerificationReport verify_lemma(const LemmaOptions& options) {
  VerificationReport report;
  report.title = "admissibility criterion in R(E6)";

  const DeformationParameters free = DeformationParameters::symbolic_free();
  const QuotientElement residual = admissibility_residual(free);
  const Polynomial c1 = first_condition_free();
  const Polynomial c2 = second_condition_free();

  report.run("L1: (x+y+f)^3 = (t1 + t2 - 2*t3)*x*y*x*y + (3*t4 - 2*t5 + t6 + t1^2 - t1*t2 + t2^2 - t3^2)*x*y*x*y*y",
             [&]() -> std::optional<std::string> {
               const FreeElement expected = c1 * re6_word("x y x y") + c2 * re6_word("x y x y y");
               return zero_or_residual(residual - re6()->normal_form(expected));
             });

  report.run("L2: residual vanishes under t2 = 2*t3 - t1, t6 = 2*t5 - 3*t4 - 3*(t3 - t1)^2",
             [&]() { return zero_or_residual(substitute(residual, options.constraints)); });

  report.run("L3: second coefficient = t6 - (2*t5 - 3*t4 - 3*(t3 - t1)^2) once t2 = 2*t3 - t1",
             [&]() -> std::optional<std::string> {
               const Polynomial after = substitute(c2, {{Indeterminate(2), Polynomial(2) * t(3) - t(1)}});
               const Polynomial expanded = Polynomial(3) * t(4) - Polynomial(2) * t(5) + t(6) +
                                           Polynomial(3) * t(1) * t(1) - Polynomial(6) * t(1) * t(3) +
                                           Polynomial(3) * t(3) * t(3);
               if (auto r = equal_or_difference(after, expanded)) return "expanded form: " + *r;
               const Polynomial d31 = t(3) - t(1);
               const Polynomial factored =
                   t(6) - (Polynomial(2) * t(5) - Polynomial(3) * t(4) - Polynomial(3) * d31 * d31);
               if (auto r = equal_or_difference(after, factored)) return "factored form: " + *r;
               return std::nullopt;
             });

  report.integer_certificate = residual.lift().has_integer_coefficients() && re6()->reduction_is_integral();
  return report;
}

VerificationReport verify_rewriting_identities() {
  VerificationReport report;
  report.title = "basis rewriting in R(E6)";
  auto w = [](std::string_view s) { return re6_word(s); };
  const FreeElement s = w("x") + w("y");
  const FreeElement cube = s * s * s;

  report.run("yyx = yyx - (x+y)^3 = -(xyx + xyy + yxy)", [&] {
    return chain_holds({w("y y x"), w("y y x") - cube, -(w("x y x") + w("x y y") + w("y x y"))});
  });
  report.run("yxyx = -xyyx = xyxy", [&] { return chain_holds({w("y x y x"), -w("x y y x"), w("x y x y")}); });
  report.run("yyxy = -(xyxy + yxyy)", [&] { return chain_holds({w("y y x y"), -(w("x y x y") + w("y x y y"))}); });
  report.run("yyxyy = -yyxyx = yxyyx = -yxyxy = xyyxy = -xyxyy", [&] {
    return chain_holds({w("y y x y y"), -w("y y x y x"), w("y x y y x"), -w("y x y x y"), w("x y y x y"),
                        -w("x y x y y")});
  });
  return report;
}

}  // namespace preproj::e6
