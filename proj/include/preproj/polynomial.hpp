#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "preproj/rational.hpp"

namespace preproj {

/// Number of indeterminates t1..t9 of the coefficient ring.
inline constexpr int kIndeterminates = 9;

/// One of the indeterminates t1..t9 (1-based, as written).
struct Indeterminate {
  int index = 1;

  constexpr Indeterminate() = default;
  constexpr explicit Indeterminate(int i) : index(i) {
    if (i < 1 || i > kIndeterminates) throw std::out_of_range("indeterminate index out of range");
  }
  [[nodiscard]] std::string name() const { return "t" + std::to_string(index); }
  friend constexpr auto operator<=>(Indeterminate, Indeterminate) = default;
};

using Exponents = std::array<std::uint16_t, kIndeterminates>;

/// Degree-lexicographic order: lower total degree first, then larger
/// exponent of t1, t2, ... first. This is the order in which terms print.
struct DegLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial over the rationals in t1..t9. Terms are kept sorted by
/// DegLexLess with no zero coefficients, so equal polynomials compare equal
/// structurally.
class Polynomial {
 public:
  using Term = std::pair<Exponents, Rational>;

  Polynomial() = default;
  template <std::integral I>
    requires(sizeof(I) <= sizeof(long))
  Polynomial(I c) : Polynomial(Rational(c)) {}  // NOLINT
  Polynomial(const Rational& c);                 // NOLINT

  static Polynomial variable(Indeterminate t);
  static Polynomial monomial(const Exponents& e, const Rational& c);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  /// Constant term value; throws if the polynomial is not constant.
  [[nodiscard]] Rational constant_value() const;
  [[nodiscard]] bool has_integer_coefficients() const;
  [[nodiscard]] int total_degree() const;
  [[nodiscard]] bool mentions(Indeterminate t) const;
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  /// Coefficient of a given monomial (zero if absent).
  [[nodiscard]] Rational coefficient(const Exponents& e) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a) {
    a *= Rational(-1);
    return a;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Text in the expression grammar, e.g. "3*t4 - 2*t5 + t1^2".
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

Polynomial pow(const Polynomial& base, unsigned exponent);

/// Simultaneous substitution t_i -> bindings[t_i]; unbound indeterminates stay.
Polynomial substitute(const Polynomial& p, const std::map<Indeterminate, Polynomial>& bindings);

template <class Field>
using Assignment = std::map<Indeterminate, Field>;

/// Evaluates p at a point of Field^9. Every indeterminate occurring in p must
/// be assigned; the message names the first missing one.
template <class Field>
Field evaluate(const Polynomial& p, const Assignment<Field>& assignment) {
  Field total(0);
  for (const auto& [exps, coef] : p.terms()) {
    Field value = field_cast<Field>(coef);
    for (int i = 0; i < kIndeterminates; ++i) {
      if (exps[static_cast<std::size_t>(i)] == 0) continue;
      const auto it = assignment.find(Indeterminate(i + 1));
      if (it == assignment.end()) {
        throw std::invalid_argument("no value for indeterminate t" + std::to_string(i + 1));
      }
      for (std::uint16_t k = 0; k < exps[static_cast<std::size_t>(i)]; ++k) value *= it->second;
    }
    total += value;
  }
  return total;
}

inline Polynomial t(int index) { return Polynomial::variable(Indeterminate(index)); }

inline std::string to_string(const Polynomial& p) { return p.to_string(); }

}  // namespace preproj
