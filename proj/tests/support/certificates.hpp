#pragma once

// Checks shared by the unit tests and the acceptance binary.

#include <cstddef>
#include <map>
#include <vector>

#include "preproj/free_element.hpp"
#include "preproj/polynomial.hpp"
#include "preproj/quotient.hpp"
#include "preproj/rational.hpp"

namespace preproj::testing {

/// Dense accumulation of (sum_k v_k basis_k) * basis_j through the structure constants.
inline void multiply_right(const QuotientAlgebra& a, const SparseVector& v, std::size_t j, std::vector<Rational>& out) {
  for (const auto& [k, c] : v) {
    for (const auto& [m, d] : a.product(k, j)) out[m] += c * d;
  }
}

struct AssociativityResult {
  std::size_t triples = 0;
  std::size_t failures = 0;
};

/// Compares (b_i b_j) b_k with b_i (b_j b_k) for every basis triple.
inline AssociativityResult associativity_sweep(const QuotientAlgebra& a) {
  const std::size_t n = a.dimension();
  AssociativityResult result;
  std::vector<Rational> left(n), right(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVector& ij = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        ++result.triples;
        const SparseVector& jk = a.product(j, k);
        if (ij.empty() && jk.empty()) continue;
        std::fill(left.begin(), left.end(), Rational(0));
        std::fill(right.begin(), right.end(), Rational(0));
        multiply_right(a, ij, k, left);
        for (const auto& [m, c] : jk) {
          for (const auto& [r, d] : a.product(i, m)) right[r] += c * d;
        }
        if (left != right) ++result.failures;
      }
    }
  }
  return result;
}

/// The free element with every coefficient evaluated at `point`.
inline FreeElement evaluate(const FreeElement& e, const Assignment<Rational>& point) {
  FreeElement out(e.quiver_ptr());
  for (const auto& [path, coef] : e.terms()) out.add_term(path, Polynomial(preproj::evaluate(coef, point)));
  return out;
}

inline QuotientElement evaluate(const QuotientElement& e, const Assignment<Rational>& point) {
  QuotientElement::Coordinates coords;
  for (const auto& [i, coef] : e.coordinates()) {
    const Rational v = preproj::evaluate(coef, point);
    if (!v.is_zero()) coords[i] = Polynomial(v);
  }
  return QuotientElement(e.algebra_ptr(), coords);
}

}  // namespace preproj::testing
