#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "preproj/polynomial.hpp"
#include "preproj/quiver.hpp"

namespace preproj {

/// Finite linear combination of paths of one quiver with Polynomial
/// coefficients. Terms iterate in path order; no stored coefficient is zero.
class FreeElement {
 public:
  using Terms = std::map<Path, Polynomial>;

  explicit FreeElement(std::shared_ptr<const Quiver> quiver);
  FreeElement(std::shared_ptr<const Quiver> quiver, const Path& p, Polynomial coefficient = Polynomial(1));

  /// Product of the named arrows, e.g. word(q, "b0 a0 b2 a2"); zero when the
  /// sequence does not compose.
  static FreeElement word(std::shared_ptr<const Quiver> quiver, std::string_view names);
  static FreeElement idempotent(std::shared_ptr<const Quiver> quiver, Vertex v);
  /// Sum of all vertex idempotents, the two-sided identity.
  static FreeElement one(std::shared_ptr<const Quiver> quiver);

  [[nodiscard]] const Quiver& quiver() const { return *quiver_; }
  [[nodiscard]] const std::shared_ptr<const Quiver>& quiver_ptr() const { return quiver_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Polynomial coefficient(const Path& p) const;

  /// True when every path shares one source and one target (vacuous for 0).
  [[nodiscard]] bool is_endpoint_homogeneous() const;
  /// True when every path has the same length (vacuous for 0).
  [[nodiscard]] bool is_degree_homogeneous() const;
  [[nodiscard]] bool has_integer_coefficients() const;
  /// Smallest path length present; throws on zero.
  [[nodiscard]] std::size_t min_length() const;

  /// Adds c * p.
  void add_term(const Path& p, const Polynomial& c);

  FreeElement& operator+=(const FreeElement& o);
  FreeElement& operator-=(const FreeElement& o);
  FreeElement& operator*=(const Polynomial& c);

  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator-(FreeElement a) { return a *= Polynomial(-1); }
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
  friend FreeElement operator*(const Polynomial& c, FreeElement a) { return a *= c; }
  friend FreeElement operator*(FreeElement a, const Polynomial& c) { return a *= c; }
  friend bool operator==(const FreeElement& a, const FreeElement& b);

  /// Pretty form in the expression grammar: terms in path order, e.g.
  /// "- x*y*x - x*y*y - y*x*y" or "(t1 - t3)*b3*b0*a0".
  [[nodiscard]] std::string to_string() const;

 private:
  void require_same_quiver(const FreeElement& o) const;

  std::shared_ptr<const Quiver> quiver_;
  Terms terms_;
};

FreeElement pow(const FreeElement& base, unsigned exponent);

/// Formats `coefficient * rest` for one term of a sum; shared by every
/// pretty-printer so that all output re-parses.
std::string format_term(const Polynomial& coefficient, const std::string& rest, bool first);

/// An algebra map between path algebras given on generators: every arrow of
/// the source quiver is sent to an element of the target quiver, and every
/// vertex to a vertex. Images must be endpoint-homogeneous and parallel to
/// the image of their arrow.
class GeneratorMap {
 public:
  GeneratorMap(std::shared_ptr<const Quiver> source, std::shared_ptr<const Quiver> target,
               std::map<Vertex, Vertex> vertex_map);

  /// Identity map on a quiver (every arrow to itself).
  static GeneratorMap identity(std::shared_ptr<const Quiver> quiver);

  /// Binds an arrow; throws if the image is not parallel to the arrow's image.
  void bind(std::string_view arrow, FreeElement image);

  [[nodiscard]] const Quiver& source() const { return *source_; }
  [[nodiscard]] const Quiver& target() const { return *target_; }
  [[nodiscard]] const std::shared_ptr<const Quiver>& target_ptr() const { return target_; }
  [[nodiscard]] bool is_bound(ArrowId id) const { return bindings_.contains(id); }
  [[nodiscard]] const FreeElement& image(ArrowId id) const;
  [[nodiscard]] Vertex image(Vertex v) const { return vertex_map_.at(v); }

 private:
  std::shared_ptr<const Quiver> source_;
  std::shared_ptr<const Quiver> target_;
  std::map<Vertex, Vertex> vertex_map_;
  std::map<ArrowId, FreeElement> bindings_;
};

/// Multiplicative extension of the map to the whole path algebra.
FreeElement substitute(const GeneratorMap& m, const FreeElement& e);

}  // namespace preproj
