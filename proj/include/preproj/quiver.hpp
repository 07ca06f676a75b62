#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace preproj {

using Vertex = int;
using ArrowId = std::uint8_t;

struct Arrow {
  std::string name;
  Vertex source = 0;
  Vertex target = 0;
};

/// A path in a quiver: either the stationary path e_v (no arrows) or a
/// sequence of arrows read left to right, so that target(arrows[k]) ==
/// source(arrows[k+1]).
///
/// Paths order by length, then by vertex (length 0) or lexicographically by
/// arrow id, which is the quiver's declared arrow order.
struct Path {
  Vertex source = 0;
  Vertex target = 0;
  std::vector<ArrowId> arrows;

  [[nodiscard]] std::size_t length() const { return arrows.size(); }
  [[nodiscard]] bool is_stationary() const { return arrows.empty(); }

  friend bool operator==(const Path&, const Path&) = default;
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);
};

class Quiver {
 public:
  Quiver(std::vector<Vertex> vertices, std::vector<Arrow> arrows);

  [[nodiscard]] const std::vector<Vertex>& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Arrow>& arrows() const { return arrows_; }
  [[nodiscard]] const Arrow& arrow(ArrowId id) const { return arrows_.at(id); }
  [[nodiscard]] bool has_vertex(Vertex v) const;
  [[nodiscard]] std::optional<ArrowId> find_arrow(std::string_view name) const;
  /// Throws std::invalid_argument for an unknown name.
  [[nodiscard]] ArrowId arrow_id(std::string_view name) const;

  [[nodiscard]] Path idempotent(Vertex v) const;
  [[nodiscard]] Path arrow_path(ArrowId id) const;
  /// Path through the named arrows, e.g. {"b0", "a0"}; throws if not composable.
  [[nodiscard]] Path path_of(const std::vector<std::string_view>& names) const;

  /// Arrow names joined by '*' ("b0*a0"), or "e<v>" for a stationary path.
  [[nodiscard]] std::string path_to_string(const Path& p) const;

  /// One "name: source -> target" line per arrow.
  [[nodiscard]] std::string adjacency_listing() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Arrow> arrows_;
};

/// p then q, or nullopt when target(p) != source(q).
std::optional<Path> compose(const Path& p, const Path& q);

/// All paths of exactly `length` arrows from `from` to `to`, ascending in path order.
std::vector<Path> enumerate_paths(const Quiver& q, Vertex from, Vertex to, std::size_t length);

/// All paths of exactly `length` arrows, ascending in path order.
std::vector<Path> enumerate_paths(const Quiver& q, std::size_t length);

enum class BuiltinQuiver { E6, L2 };

/// Shared immutable instances of the two shipped quivers: the double quiver of
/// E6 (vertices 0..5, arrows a0 b0 a1 b1 a2 b2 a3 b3 a4 b4) and the one-vertex
/// quiver with loops x, y.
std::shared_ptr<const Quiver> builtin_quiver(BuiltinQuiver which);

}  // namespace preproj
