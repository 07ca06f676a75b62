#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "preproj/free_element.hpp"
#include "preproj/polynomial.hpp"
#include "preproj/quiver.hpp"
#include "preproj/rational.hpp"

namespace preproj {

/// Sparse vector over basis indices, ascending by index, no zero entries.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Relations with constant (rational) coefficients, each homogeneous in
/// endpoints and in length.
struct RelationSet {
  std::shared_ptr<const Quiver> quiver;
  std::vector<FreeElement> relations;
};

struct BuildOptions {
  std::size_t max_degree = 64;
  /// Refuse to enumerate more paths than this in a single degree.
  std::size_t max_paths_per_degree = 2'000'000;
};

/// e_v A e_v with its induced multiplication; indices are local to the corner.
struct CornerAlgebra {
  Vertex vertex = 0;
  std::vector<std::size_t> global_index;
  std::vector<Path> basis;
  /// product[i * n + j] = basis[i] * basis[j] in local coordinates
  std::vector<SparseVector> product;

  [[nodiscard]] std::size_t dimension() const { return basis.size(); }
};

class QuotientElement;

/// Finite-dimensional graded quotient of a path algebra by a homogeneous
/// ideal, built by exact elimination one degree at a time.
///
/// The basis consists of paths. Within each degree and each endpoint block,
/// rows spanning the ideal are reduced to echelon form with the columns
/// sorted from the largest path down, so every pivot (the largest path of
/// its row) is rewritten in terms of smaller surviving paths.
class QuotientAlgebra : public std::enable_shared_from_this<QuotientAlgebra> {
 public:
  /// Throws std::invalid_argument for non-rational or inhomogeneous relations
  /// and std::runtime_error when the guards in `options` trip.
  static std::shared_ptr<const QuotientAlgebra> build(RelationSet relations, BuildOptions options = {});

  [[nodiscard]] const Quiver& quiver() const { return *relations_.quiver; }
  [[nodiscard]] const std::shared_ptr<const Quiver>& quiver_ptr() const { return relations_.quiver; }
  [[nodiscard]] const RelationSet& relations() const { return relations_; }

  [[nodiscard]] std::size_t dimension() const { return basis_.size(); }
  /// dim e_i A e_j; throws for unknown vertices.
  [[nodiscard]] std::size_t dimension_at(Vertex i, Vertex j) const;
  /// Least N such that every path of length N vanishes.
  [[nodiscard]] std::size_t nilpotency_degree() const { return nilpotency_degree_; }

  [[nodiscard]] const std::vector<Path>& basis() const { return basis_; }
  [[nodiscard]] const Path& basis_path(std::size_t index) const { return basis_.at(index); }
  [[nodiscard]] std::optional<std::size_t> basis_index(const Path& p) const;

  /// Coordinates of a single path's residue class.
  [[nodiscard]] SparseVector reduce(const Path& p) const;

  /// Structure constants: basis[i] * basis[j].
  [[nodiscard]] const SparseVector& product(std::size_t i, std::size_t j) const {
    return products_[i * basis_.size() + j];
  }

  /// True when every stored reduction and structure constant is an integer.
  [[nodiscard]] bool reduction_is_integral() const { return integral_; }

  [[nodiscard]] CornerAlgebra corner(Vertex v) const;

  [[nodiscard]] QuotientElement normal_form(const FreeElement& e) const;
  [[nodiscard]] QuotientElement zero() const;
  [[nodiscard]] QuotientElement generator(std::size_t basis_index) const;

 private:
  QuotientAlgebra() = default;

  RelationSet relations_;
  std::vector<Path> basis_;
  std::map<Path, std::size_t> index_;
  std::map<Path, SparseVector> reductions_;  // non-basis paths shorter than the nilpotency degree
  std::vector<SparseVector> products_;
  std::size_t nilpotency_degree_ = 0;
  bool integral_ = true;
};

/// A residue class written in the basis of its algebra, with Polynomial
/// coordinates (no zero coordinate is stored).
class QuotientElement {
 public:
  using Coordinates = std::map<std::size_t, Polynomial>;

  QuotientElement(std::shared_ptr<const QuotientAlgebra> algebra, Coordinates coords);

  [[nodiscard]] const QuotientAlgebra& algebra() const { return *algebra_; }
  [[nodiscard]] const std::shared_ptr<const QuotientAlgebra>& algebra_ptr() const { return algebra_; }
  [[nodiscard]] const Coordinates& coordinates() const { return coords_; }
  [[nodiscard]] Polynomial coordinate(std::size_t i) const;
  [[nodiscard]] bool is_zero() const { return coords_.empty(); }

  /// The element of the free path algebra with the same basis expansion.
  [[nodiscard]] FreeElement lift() const;

  QuotientElement& operator+=(const QuotientElement& o);
  QuotientElement& operator-=(const QuotientElement& o);
  QuotientElement& operator*=(const Polynomial& c);

  friend QuotientElement operator+(QuotientElement a, const QuotientElement& b) { return a += b; }
  friend QuotientElement operator-(QuotientElement a, const QuotientElement& b) { return a -= b; }
  friend QuotientElement operator*(const QuotientElement& a, const QuotientElement& b);
  friend QuotientElement operator*(const Polynomial& c, QuotientElement a) { return a *= c; }
  friend bool operator==(const QuotientElement& a, const QuotientElement& b);

  [[nodiscard]] std::string to_string() const;

 private:
  void require_same_algebra(const QuotientElement& o) const;
  void add(std::size_t i, const Polynomial& c);

  std::shared_ptr<const QuotientAlgebra> algebra_;
  Coordinates coords_;
};

/// Applies a coordinate-wise substitution of indeterminates.
QuotientElement substitute(const QuotientElement& e, const std::map<Indeterminate, Polynomial>& bindings);

}  // namespace preproj
