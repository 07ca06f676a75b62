#include "preproj/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace preproj {

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (auto c = a.arrows.size() <=> b.arrows.size(); c != 0) return c;
  if (a.arrows.empty()) return a.source <=> b.source;
  return a.arrows <=> b.arrows;
}

Quiver::Quiver(std::vector<Vertex> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  if (arrows_.size() > 255) throw std::invalid_argument("too many arrows");
  std::set<std::string> names;
  for (const auto& a : arrows_) {
    if (!has_vertex(a.source) || !has_vertex(a.target)) {
      throw std::invalid_argument("arrow " + a.name + " references an unknown vertex");
    }
    if (!names.insert(a.name).second) throw std::invalid_argument("duplicate arrow name " + a.name);
  }
}

bool Quiver::has_vertex(Vertex v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].name == name) return static_cast<ArrowId>(i);
  }
  return std::nullopt;
}

ArrowId Quiver::arrow_id(std::string_view name) const {
  if (auto id = find_arrow(name)) return *id;
  throw std::invalid_argument("unknown arrow '" + std::string(name) + "'");
}

Path Quiver::idempotent(Vertex v) const {
  if (!has_vertex(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v));
  return Path{v, v, {}};
}

Path Quiver::arrow_path(ArrowId id) const {
  const Arrow& a = arrows_.at(id);
  return Path{a.source, a.target, {id}};
}

Path Quiver::path_of(const std::vector<std::string_view>& names) const {
  if (names.empty()) throw std::invalid_argument("empty arrow sequence");
  Path p = arrow_path(arrow_id(names.front()));
  for (std::size_t i = 1; i < names.size(); ++i) {
    auto next = compose(p, arrow_path(arrow_id(names[i])));
    if (!next) throw std::invalid_argument("arrows are not composable at '" + std::string(names[i]) + "'");
    p = std::move(*next);
  }
  return p;
}

std::string Quiver::path_to_string(const Path& p) const {
  if (p.is_stationary()) return "e" + std::to_string(p.source);
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += '*';
    out += arrows_.at(p.arrows[i]).name;
  }
  return out;
}

std::string Quiver::adjacency_listing() const {
  std::ostringstream os;
  for (const auto& a : arrows_) os << a.name << ": " << a.source << " -> " << a.target << '\n';
  return os.str();
}

std::optional<Path> compose(const Path& p, const Path& q) {
  if (p.target != q.source) return std::nullopt;
  Path r{p.source, q.target, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

std::vector<Path> enumerate_paths(const Quiver& q, std::size_t length) {
  std::vector<Path> layer;
  for (Vertex v : q.vertices()) layer.push_back(q.idempotent(v));
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<Path> next;
    for (const auto& p : layer) {
      for (std::size_t id = 0; id < q.arrows().size(); ++id) {
        if (q.arrows()[id].source != p.target) continue;
        Path r{p.source, q.arrows()[id].target, p.arrows};
        r.arrows.push_back(static_cast<ArrowId>(id));
        next.push_back(std::move(r));
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::vector<Path> enumerate_paths(const Quiver& q, Vertex from, Vertex to, std::size_t length) {
  if (!q.has_vertex(from)) throw std::invalid_argument("unknown vertex " + std::to_string(from));
  if (!q.has_vertex(to)) throw std::invalid_argument("unknown vertex " + std::to_string(to));
  std::vector<Path> all = enumerate_paths(q, length);
  std::erase_if(all, [&](const Path& p) { return p.source != from || p.target != to; });
  return all;
}

std::shared_ptr<const Quiver> builtin_quiver(BuiltinQuiver which) {
  static const auto e6 = std::make_shared<const Quiver>(
      std::vector<Vertex>{0, 1, 2, 3, 4, 5},
      std::vector<Arrow>{{"a0", 0, 3}, {"b0", 3, 0}, {"a1", 1, 2}, {"b1", 2, 1}, {"a2", 2, 3},
                         {"b2", 3, 2}, {"a3", 3, 4}, {"b3", 4, 3}, {"a4", 4, 5}, {"b4", 5, 4}});
  static const auto l2 =
      std::make_shared<const Quiver>(std::vector<Vertex>{0}, std::vector<Arrow>{{"x", 0, 0}, {"y", 0, 0}});
  return which == BuiltinQuiver::E6 ? e6 : l2;
}

}  // namespace preproj
