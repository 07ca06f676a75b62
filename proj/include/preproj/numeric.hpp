#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "preproj/quotient.hpp"
#include "preproj/rational.hpp"

namespace preproj {

/// Structure constants of a QuotientAlgebra mapped into a coefficient field.
/// This is the purely numeric side of the library: elements are dense
/// coordinate vectors and multiplication goes through the table only.
template <class Field>
class NumericAlgebra {
 public:
  using Entry = std::pair<std::size_t, Field>;

  explicit NumericAlgebra(std::shared_ptr<const QuotientAlgebra> algebra)
      : algebra_(std::move(algebra)), n_(algebra_->dimension()), table_(n_ * n_) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        for (const auto& [k, value] : algebra_->product(i, j)) {
          table_[i * n_ + j].emplace_back(k, field_cast<Field>(value));
        }
      }
    }
  }

  [[nodiscard]] std::size_t dimension() const { return n_; }
  [[nodiscard]] const QuotientAlgebra& algebra() const { return *algebra_; }
  [[nodiscard]] const std::vector<Entry>& product(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }

 private:
  std::shared_ptr<const QuotientAlgebra> algebra_;
  std::size_t n_;
  std::vector<std::vector<Entry>> table_;
};

/// Dense coordinate vector in a NumericAlgebra.
template <class Field>
class DenseElement {
 public:
  explicit DenseElement(const NumericAlgebra<Field>& algebra)
      : algebra_(&algebra), coords_(algebra.dimension(), Field(0)) {}

  static DenseElement basis_vector(const NumericAlgebra<Field>& algebra, std::size_t i) {
    DenseElement e(algebra);
    e.coords_.at(i) = Field(1);
    return e;
  }

  /// Residue of a single path, e.g. an arrow.
  static DenseElement of_path(const NumericAlgebra<Field>& algebra, const Path& p) {
    DenseElement e(algebra);
    for (const auto& [k, value] : algebra.algebra().reduce(p)) e.coords_[k] = field_cast<Field>(value);
    return e;
  }

  static DenseElement arrow(const NumericAlgebra<Field>& algebra, std::string_view name) {
    const Quiver& q = algebra.algebra().quiver();
    return of_path(algebra, q.arrow_path(q.arrow_id(name)));
  }

  [[nodiscard]] const std::vector<Field>& coordinates() const { return coords_; }
  [[nodiscard]] const Field& operator[](std::size_t i) const { return coords_[i]; }
  [[nodiscard]] bool is_zero() const {
    for (const auto& c : coords_) {
      if (!preproj::is_zero(c)) return false;
    }
    return true;
  }

  DenseElement& operator+=(const DenseElement& o) {
    check(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  DenseElement& operator-=(const DenseElement& o) {
    check(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  DenseElement& operator*=(const Field& c) {
    for (auto& x : coords_) x *= c;
    return *this;
  }

  friend DenseElement operator+(DenseElement a, const DenseElement& b) { return a += b; }
  friend DenseElement operator-(DenseElement a, const DenseElement& b) { return a -= b; }
  friend DenseElement operator-(DenseElement a) { return a *= Field(-1); }
  friend DenseElement operator*(const Field& c, DenseElement a) { return a *= c; }
  friend DenseElement operator*(const DenseElement& a, const DenseElement& b) {
    a.check(b);
    DenseElement out(*a.algebra_);
    const std::size_t n = a.coords_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (preproj::is_zero(a.coords_[i])) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (preproj::is_zero(b.coords_[j])) continue;
        const auto& entries = a.algebra_->product(i, j);
        if (entries.empty()) continue;
        const Field cij = a.coords_[i] * b.coords_[j];
        for (const auto& [k, v] : entries) out.coords_[k] += cij * v;
      }
    }
    return out;
  }
  friend bool operator==(const DenseElement& a, const DenseElement& b) {
    return a.algebra_ == b.algebra_ && a.coords_ == b.coords_;
  }

 private:
  void check(const DenseElement& o) const {
    if (algebra_ != o.algebra_) throw std::invalid_argument("dense elements of different algebras");
  }

  const NumericAlgebra<Field>* algebra_;
  std::vector<Field> coords_;
};

/// Rank of a list of row vectors by exact Gaussian elimination.
template <class Field>
std::size_t rank(std::vector<std::vector<Field>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && is_zero(rows[pivot][c])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Field inv = Field(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || is_zero(rows[i][c])) continue;
      const Field factor = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= factor * rows[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace preproj
