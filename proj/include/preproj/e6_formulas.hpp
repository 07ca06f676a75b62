#pragma once

// Formulas of the E6 deformation theory, written once over a generic
// coefficient ring R and a generic algebra element type E. They are
// instantiated symbolically (Polynomial, FreeElement) and numerically
// (Rational or Zp, DenseElement).

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace preproj::e6 {

template <class R>
using Theta = std::array<R, 9>;

/// theta_k, 1-based as written.
template <class R>
const R& th(const Theta<R>& theta, int k) {
  return theta[static_cast<std::size_t>(k - 1)];
}

template <class R>
R cube(const R& a) {
  return a * a * a;
}

template <class R>
struct DerivedConstants {
  R alpha, beta, gamma, delta, alpha1, beta1, alpha2, beta2, alpha3;
};

template <class R>
DerivedConstants<R> derived_constants(const Theta<R>& theta) {
  const R& t1 = th(theta, 1);
  const R& t2 = th(theta, 2);
  const R& t3 = th(theta, 3);
  const R& t4 = th(theta, 4);
  const R& t5 = th(theta, 5);
  const R& t6 = th(theta, 6);
  const R& t7 = th(theta, 7);
  const R& t8 = th(theta, 8);
  const R& t9 = th(theta, 9);
  const R d31 = t3 - t1;

  DerivedConstants<R> c;
  c.alpha = t4 + d31 * d31;
  c.beta = t5 - R(2) * t4 - R(2) * d31 * d31;
  c.gamma = t7 - R(8) * t1 * t3 * t3 + R(7) * t1 * t1 * t3 + R(2) * t3 * t4 - R(2) * cube(t1) -
            R(2) * t1 * t4 + R(3) * cube(t3);
  c.delta = R(2) * t1 * t1 * t1 * t1 - R(6) * cube(t1) * t3 - R(3) * t1 * t1 * t5 + R(4) * t1 * t1 * t4 +
            R(6) * t1 * t1 * t3 * t3 + R(5) * t1 * t3 * t5 - R(6) * t1 * t3 * t4 + t5 * t5 - R(3) * t5 * t4 +
            R(2) * t4 * t4 - R(2) * cube(t3) * t1 - R(2) * t3 * t3 * t5 + R(2) * t3 * t3 * t4 + R(2) * t1 * t8 -
            R(3) * t3 * t8 - t9;
  c.alpha1 = -c.alpha + t1 * t3 - t3 * t3;
  c.beta1 = -c.beta + t1 * t3 - t3 * t3;
  c.alpha2 = -c.gamma - t3 * t3 * (t2 - t3) + t1 * c.beta + t1 * c.alpha1 - t3 * c.alpha1;
  c.beta2 = -(t3 * t3 * (t1 - t3)) + t3 * c.alpha + t3 * c.beta1 + t3 * c.beta;
  c.alpha3 = -(t3 * t3 * (t1 * t1 + t2 * t2 + R(2) * t4 - R(2) * t5 + t6 - t1 * t2 - t2 * t3)) +
             c.alpha1 * t3 * t3 * (t1 - t3) + c.beta * t3 * t3 * (t2 - t3) + t3 * t8 - t3 * c.alpha2 -
             t3 * c.beta2 - c.alpha * c.alpha1 + c.beta * c.alpha1 - c.beta * c.beta1 - c.gamma * t3;
  return c;
}

/// Coefficient of b3*b2*a2*b0*a0 in b3' (and its negative in the inverse).
template <class R>
R b3_correction(const Theta<R>& theta) {
  const R& t1 = th(theta, 1);
  const R& t3 = th(theta, 3);
  return th(theta, 4) - th(theta, 5) - t1 * t3 + t1 * t1;
}

/// (theta1 - theta3)(2 theta3 - theta1) - theta4: first correction of a4'.
template <class R>
R a4_first_correction(const Theta<R>& theta) {
  const R& t1 = th(theta, 1);
  const R& t3 = th(theta, 3);
  return (t1 - t3) * (R(2) * t3 - t1) - th(theta, 4);
}

/// Second correction of a4'.
template <class R>
R a4_second_correction(const Theta<R>& theta) {
  const R& t1 = th(theta, 1);
  const R& t3 = th(theta, 3);
  const R& t4 = th(theta, 4);
  return R(3) * t1 * t3 * t3 - t3 * t4 - th(theta, 7) - R(2) * t1 * t1 * t3 - cube(t3) + t1 * th(theta, 5);
}

/// Resolves a single word token ("a2", "b0", or a primed "a2'") to an element.
template <class E>
using Resolver = std::function<E(std::string_view)>;

/// Product of the space-separated tokens of `word`, left to right.
template <class E>
E word(const Resolver<E>& resolve, std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto start = text.find_first_not_of(' ', pos);
    if (start == std::string_view::npos) break;
    auto end = text.find(' ', start);
    if (end == std::string_view::npos) end = text.size();
    tokens.push_back(text.substr(start, end - start));
    pos = end;
  }
  E out = resolve(tokens.at(0));
  for (std::size_t i = 1; i < tokens.size(); ++i) out = out * resolve(tokens[i]);
  return out;
}

/// The primed generators a2' b2' a3' b3' a4' b4'; all other arrows are unchanged.
template <class E>
struct PrimedGenerators {
  E a2, b2, a3, b3, a4, b4;
};

template <class E, class R>
PrimedGenerators<E> primed_generators(const Theta<R>& theta, const Resolver<E>& arrow) {
  const DerivedConstants<R> c = derived_constants(theta);
  auto w = [&](std::string_view text) { return word(arrow, text); };
  const R& t1 = th(theta, 1);
  const R& t3 = th(theta, 3);
  return PrimedGenerators<E>{
      .a2 = w("a2") - th(theta, 8) * w("a2 b0 a0 b2 a2 b2 a2"),
      .b2 = w("b2") + c.delta * w("b0 a0 b2 a2 b0 a0 b2 a2 b2"),
      .a3 = w("a3") + t1 * w("b0 a0 a3") + t3 * w("b2 a2 a3") + c.alpha * w("b0 a0 b2 a2 a3") +
            c.beta * w("b2 a2 b0 a0 a3") + c.gamma * w("b0 a0 b2 a2 b0 a0 a3"),
      .b3 = w("b3") + (t3 - t1) * w("b3 b0 a0") + b3_correction(theta) * w("b3 b2 a2 b0 a0"),
      .a4 = w("a4") + a4_first_correction(theta) * w("b3 b0 a0 a3 a4") +
            a4_second_correction(theta) * w("b3 b2 a2 b0 a0 a3 a4"),
      .b4 = w("b4") - a4_first_correction(theta) * w("b4 b3 b0 a0 a3"),
  };
}

/// Resolver that maps a2..b4 to their primed images and every other arrow to itself.
template <class E>
Resolver<E> primed_resolver(const PrimedGenerators<E>& g, Resolver<E> arrow) {
  return [g, arrow = std::move(arrow)](std::string_view name) -> E {
    if (name == "a2") return g.a2;
    if (name == "b2") return g.b2;
    if (name == "a3") return g.a3;
    if (name == "b3") return g.b3;
    if (name == "a4") return g.a4;
    if (name == "b4") return g.b4;
    return arrow(name);
  };
}

/// Words of f in the order of its coefficients theta1..theta9.
inline constexpr std::array<std::string_view, 9> kDeformationWords = {"x y",   "y x",   "y y",     "x y x",   "x y y",
                                                                      "y x y", "x y x y", "y x y y", "x y x y y"};

/// f(X, Y) = sum_k theta_k * word_k(X, Y).
template <class E, class R>
E deformation(const Theta<R>& theta, const E& x, const E& y) {
  const Resolver<E> xy = [&](std::string_view n) -> E { return n == "x" ? x : y; };
  E out = R(0) * x;
  for (std::size_t k = 0; k < kDeformationWords.size(); ++k) out += theta[k] * word(xy, kDeformationWords[k]);
  return out;
}

inline constexpr std::array<std::string_view, 7> kDeformedRelationNames = {
    "a0*b0",          "a1*b1",      "b1*a1 + a2*b2", "b3*a3 + a4*b4", "b4*a4",
    "b0*a0 + b2*a2 + a3*b3 + f(b0*a0, b2*a2)", "(b0*a0 + b2*a2)^3"};

/// The seven defining relations of the deformed algebra, evaluated on the
/// given arrow images.
template <class E, class R>
std::vector<E> deformed_relations(const Theta<R>& theta, const Resolver<E>& arrow) {
  auto w = [&](std::string_view text) { return word(arrow, text); };
  const E x = w("b0 a0");
  const E y = w("b2 a2");
  const E s = x + y;
  return {w("a0 b0"),
          w("a1 b1"),
          w("b1 a1") + w("a2 b2"),
          w("b3 a3") + w("a4 b4"),
          w("b4 a4"),
          x + y + w("a3 b3") + deformation(theta, x, y),
          s * s * s};
}

enum class InverseMode { AsPrinted, Corrected };

/// Right-hand sides of the inverse change of generators, in terms of the
/// primed generators (tokens ending in ') and the unchanged arrows a0, b0.
/// Order: a2, b2, a3, b3, a4, b4.
template <class E, class R>
std::vector<E> inverse_right_hand_sides(const Theta<R>& theta, const Resolver<E>& resolve, InverseMode mode) {
  const DerivedConstants<R> c = derived_constants(theta);
  auto w = [&](std::string_view text) { return word(resolve, text); };
  const R& t1 = th(theta, 1);
  const R& t3 = th(theta, 3);
  const R k = b3_correction(theta);
  const R m = a4_first_correction(theta);
  const R l = a4_second_correction(theta);
  const bool printed = mode == InverseMode::AsPrinted;

  std::vector<E> rhs;
  rhs.push_back(w("a2'") + th(theta, 8) * w("a2' b0 a0 b2' a2' b2' a2'"));
  rhs.push_back(w("b2'") - c.delta * w("b0 a0 b2' a2' b0 a0 b2' a2' b2'"));
  rhs.push_back(w("a3'") - t1 * w("b0 a0 a3'") - t3 * w("b2' a2' a3'") + c.alpha1 * w("b0 a0 b2' a2' a3'") +
                c.beta1 * w(printed ? "b2' a2 b0 a0 a3'" : "b2' a2' b0 a0 a3'") +
                c.alpha2 * w("b0 a0 b2' a2' b0 a0 a3'") + c.beta2 * w("b2' a2' b0 a0 b2' a2' a3'") +
                c.alpha3 * w("b0 a0 b2' a2' b0 a0 b2' a2' a3'"));
  rhs.push_back(w("b3'") - (t3 - t1) * w("b3' b0 a0") - k * w("b3' b2' a2' b0 a0") +
                (t3 - t1) * k * w("b3' b0 a0 b2' a2' b0 a0") + k * k * w("b3' b2' a2' b0 a0 b2' a2' b0 a0"));
  rhs.push_back(w(printed ? "a4' a2'" : "a4'") - m * w("b3' b0 a0 a3' a4'") - l * w("b3' b2' a2' b0 a0 a3' a4'"));
  rhs.push_back(w("b4'") + m * w("b4' b3' b0 a0 a3'") - t3 * m * w("b4' b3' b0 a0 b2' a2' a3'"));
  return rhs;
}

inline constexpr std::array<std::string_view, 6> kChangedArrows = {"a2", "b2", "a3", "b3", "a4", "b4"};

/// Resolver for inverse formulas: "x'" is the primed image, "x" the arrow itself.
template <class E>
Resolver<E> inverse_resolver(const PrimedGenerators<E>& g, Resolver<E> arrow) {
  Resolver<E> primed = primed_resolver(g, arrow);
  return [primed, arrow](std::string_view token) -> E {
    if (!token.empty() && token.back() == '\'') return primed(token.substr(0, token.size() - 1));
    return arrow(token);
  };
}

}  // namespace preproj::e6
