#include "preproj/e6.hpp"
#include "preproj/numeric.hpp"

namespace preproj::e6 {

namespace {

const char* const kBasisWords[] = {"",      "x",       "y",         "x y",         "y x",     "y y",
                                   "x y x", "x y y",   "y x y",     "x y x y",     "y x y y", "x y x y y"};

}  // namespace

VerificationReport corner_iso_check() {
  VerificationReport report;
  report.title = "R(E6) is the corner algebra of P(E6) at the deformed vertex";

  const auto& p = pe6();
  const auto& r = re6();
  const GeneratorMap embed = loop_embedding(pe6_word("b0 a0"), pe6_word("b2 a2"));

  report.run("C1: dim e3*P(E6)*e3 = dim R(E6) = 12", [&]() -> std::optional<std::string> {
    const std::size_t corner = p->dimension_at(kLoopVertex, kLoopVertex);
    if (corner == r->dimension() && corner == 12) return std::nullopt;
    return "corner " + std::to_string(corner) + ", R(E6) " + std::to_string(r->dimension());
  });

  report.run("C2: x^2, y^3, (x+y)^3 vanish under x -> b0*a0, y -> b2*a2", [&]() -> std::optional<std::string> {
    std::string residuals;
    for (const FreeElement& rel : r->relations().relations) {
      const QuotientElement nf = p->normal_form(substitute(embed, rel));
      if (!nf.is_zero()) residuals += (residuals.empty() ? "" : "; ") + nf.to_string();
    }
    if (residuals.empty()) return std::nullopt;
    return residuals;
  });

  report.run("C3: images of the 12 basis words of R(E6) have rank 12", [&]() -> std::optional<std::string> {
    std::vector<std::vector<Rational>> rows;
    for (const char* w : kBasisWords) {
      const FreeElement source = *w ? re6_word(w) : FreeElement::idempotent(builtin_quiver(BuiltinQuiver::L2), 0);
      const QuotientElement image = p->normal_form(substitute(embed, source));
      std::vector<Rational> row(p->dimension());
      for (std::size_t i = 0; i < row.size(); ++i) {
        const Polynomial c = image.coordinate(i);
        if (!c.is_zero()) row[i] = c.constant_value();
      }
      rows.push_back(std::move(row));
    }
    const std::size_t rk = rank<Rational>(rows);
    if (rk == 12) return std::nullopt;
    return "rank " + std::to_string(rk);
  });

  report.notes.push_back({"corner vertex",
                          "e0*P(E6)*e0 has dimension " + std::to_string(p->dimension_at(0, 0)) +
                              " with the arrow directions of the drawn quiver; the loops b0*a0 and b2*a2 and the "
                              "deformed relation live at vertex 3, whose corner is the 12-dimensional one"});
  report.integer_certificate = p->reduction_is_integral() && r->reduction_is_integral();
  return report;
}

}  // namespace preproj::e6
