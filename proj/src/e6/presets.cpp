#include <stdexcept>

#include "preproj/e6.hpp"

namespace preproj::e6 {

namespace {

std::shared_ptr<const Quiver> e6_quiver() { return builtin_quiver(BuiltinQuiver::E6); }
std::shared_ptr<const Quiver> l2_quiver() { return builtin_quiver(BuiltinQuiver::L2); }

Resolver<FreeElement> free_arrows() {
  return [](std::string_view name) { return pe6_word(name); };
}

}  // namespace

RelationSet pe6_relations() {
  return RelationSet{e6_quiver(),
                     {pe6_word("a0 b0"), pe6_word("a1 b1"), pe6_word("b1 a1") + pe6_word("a2 b2"),
                      pe6_word("b0 a0") + pe6_word("b2 a2") + pe6_word("a3 b3"),
                      pe6_word("b3 a3") + pe6_word("a4 b4"), pe6_word("b4 a4")}};
}

RelationSet re6_relations() {
  const FreeElement x = re6_word("x");
  const FreeElement y = re6_word("y");
  return RelationSet{l2_quiver(), {x * x, y * y * y, pow(x + y, 3)}};
}

std::shared_ptr<const QuotientAlgebra> make_pe6() { return QuotientAlgebra::build(pe6_relations()); }
std::shared_ptr<const QuotientAlgebra> make_re6() { return QuotientAlgebra::build(re6_relations()); }

const std::shared_ptr<const QuotientAlgebra>& pe6() {
  static const auto instance = make_pe6();
  return instance;
}

const std::shared_ptr<const QuotientAlgebra>& re6() {
  static const auto instance = make_re6();
  return instance;
}

FreeElement pe6_word(std::string_view names) { return FreeElement::word(e6_quiver(), names); }
FreeElement re6_word(std::string_view names) { return FreeElement::word(l2_quiver(), names); }

DeformationParameters DeformationParameters::symbolic_free() {
  DeformationParameters f;
  for (int k = 1; k <= 9; ++k) f.theta[static_cast<std::size_t>(k - 1)] = t(k);
  f.mode = ParameterMode::SymbolicFree;
  return f;
}

DeformationParameters DeformationParameters::symbolic_constrained() {
  DeformationParameters f = symbolic_free();
  const auto constraints = lemma_constraints();
  f.theta[1] = constraints.at(Indeterminate(2));
  f.theta[5] = constraints.at(Indeterminate(6));
  f.mode = ParameterMode::SymbolicConstrained;
  return f;
}

DeformationParameters DeformationParameters::numeric(const std::array<Rational, 9>& values) {
  DeformationParameters f;
  for (std::size_t k = 0; k < 9; ++k) f.theta[k] = Polynomial(values[k]);
  f.mode = ParameterMode::Numeric;
  return f;
}

Polynomial DeformationParameters::first_condition() const { return theta[0] + theta[1] - Polynomial(2) * theta[2]; }

Polynomial DeformationParameters::second_condition() const {
  const Polynomial& t1 = theta[0];
  const Polynomial& t2 = theta[1];
  const Polynomial& t3 = theta[2];
  return Polynomial(3) * theta[3] - Polynomial(2) * theta[4] + theta[5] + t1 * t1 - t1 * t2 + t2 * t2 - t3 * t3;
}

bool DeformationParameters::satisfies_constraints() const {
  return first_condition().is_zero() && second_condition().is_zero();
}

FreeElement DeformationParameters::element() const {
  return deformation(theta, re6_word("x"), re6_word("y"));
}

std::map<Indeterminate, Polynomial> lemma_constraints() {
  const Polynomial d31 = t(3) - t(1);
  return {{Indeterminate(2), Polynomial(2) * t(3) - t(1)},
          {Indeterminate(6), Polynomial(2) * t(5) - Polynomial(3) * t(4) - Polynomial(3) * d31 * d31}};
}

Polynomial first_condition_free() { return DeformationParameters::symbolic_free().first_condition(); }
Polynomial second_condition_free() { return DeformationParameters::symbolic_free().second_condition(); }

QuotientElement admissibility_residual(const DeformationParameters& f) {
  const FreeElement s = re6_word("x") + re6_word("y") + f.element();
  return re6()->normal_form(s * s * s);
}

bool is_admissible(const DeformationParameters& f) { return admissibility_residual(f).is_zero(); }

DerivedConstants<Polynomial> derived_constants(const DeformationParameters& f) {
  return e6::derived_constants(f.theta);
}

PrimedGenerators<FreeElement> primed_generators(const DeformationParameters& f) {
  if (f.mode == ParameterMode::Numeric && !f.satisfies_constraints()) {
    throw std::invalid_argument("deformation parameters violate the admissibility constraints");
  }
  return e6::primed_generators<FreeElement, Polynomial>(f.theta, free_arrows());
}

GeneratorMap substituted_generators(const DeformationParameters& f) {
  const PrimedGenerators<FreeElement> g = primed_generators(f);
  GeneratorMap m = GeneratorMap::identity(e6_quiver());
  m.bind("a2", g.a2);
  m.bind("b2", g.b2);
  m.bind("a3", g.a3);
  m.bind("b3", g.b3);
  m.bind("a4", g.a4);
  m.bind("b4", g.b4);
  return m;
}

GeneratorMap loop_embedding(const FreeElement& x_image, const FreeElement& y_image) {
  GeneratorMap m(l2_quiver(), e6_quiver(), {{0, kLoopVertex}});
  m.bind("x", x_image);
  m.bind("y", y_image);
  return m;
}

std::vector<FreeElement> deformed_relations(const DeformationParameters& f) {
  const FreeElement x = pe6_word("b0 a0");
  const FreeElement y = pe6_word("b2 a2");
  const FreeElement f_loops = substitute(loop_embedding(x, y), f.element());
  const FreeElement s = x + y;
  return {pe6_word("a0 b0"),
          pe6_word("a1 b1"),
          pe6_word("b1 a1") + pe6_word("a2 b2"),
          pe6_word("b3 a3") + pe6_word("a4 b4"),
          pe6_word("b4 a4"),
          x + y + pe6_word("a3 b3") + f_loops,
          s * s * s};
}

}  // namespace preproj::e6
