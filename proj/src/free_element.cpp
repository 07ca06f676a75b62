#include "preproj/free_element.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace preproj {

FreeElement::FreeElement(std::shared_ptr<const Quiver> quiver) : quiver_(std::move(quiver)) {
  if (!quiver_) throw std::invalid_argument("free element without a quiver");
}

FreeElement::FreeElement(std::shared_ptr<const Quiver> quiver, const Path& p, Polynomial coefficient)
    : FreeElement(std::move(quiver)) {
  add_term(p, coefficient);
}

FreeElement FreeElement::word(std::shared_ptr<const Quiver> quiver, std::string_view names) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (pos < names.size()) {
    const auto start = names.find_first_not_of(' ', pos);
    if (start == std::string_view::npos) break;
    const auto end = std::min(names.find(' ', start), names.size());
    parts.push_back(names.substr(start, end - start));
    pos = end;
  }
  if (parts.empty()) throw std::invalid_argument("empty word");
  Path p = quiver->arrow_path(quiver->arrow_id(parts.front()));
  for (std::size_t i = 1; i < parts.size(); ++i) {
    auto next = compose(p, quiver->arrow_path(quiver->arrow_id(parts[i])));
    if (!next) return FreeElement(std::move(quiver));
    p = std::move(*next);
  }
  return FreeElement(std::move(quiver), p);
}

FreeElement FreeElement::idempotent(std::shared_ptr<const Quiver> quiver, Vertex v) {
  const Path p = quiver->idempotent(v);
  return FreeElement(std::move(quiver), p);
}

FreeElement FreeElement::one(std::shared_ptr<const Quiver> quiver) {
  FreeElement e(quiver);
  for (Vertex v : quiver->vertices()) e.add_term(quiver->idempotent(v), Polynomial(1));
  return e;
}

Polynomial FreeElement::coefficient(const Path& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Polynomial() : it->second;
}

bool FreeElement::is_endpoint_homogeneous() const {
  if (terms_.empty()) return true;
  const Path& first = terms_.begin()->first;
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& kv) {
    return kv.first.source == first.source && kv.first.target == first.target;
  });
}

bool FreeElement::is_degree_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.length() == terms_.rbegin()->first.length();
}

bool FreeElement::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.second.has_integer_coefficients(); });
}

std::size_t FreeElement::min_length() const {
  if (terms_.empty()) throw std::logic_error("min_length of zero element");
  return terms_.begin()->first.length();
}

void FreeElement::add_term(const Path& p, const Polynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void FreeElement::require_same_quiver(const FreeElement& o) const {
  if (quiver_ != o.quiver_) throw std::invalid_argument("elements live in different path algebras");
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
  require_same_quiver(o);
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) {
  require_same_quiver(o);
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

FreeElement& FreeElement::operator*=(const Polynomial& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, coef] : terms_) coef *= c;
  return *this;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
  a.require_same_quiver(b);
  FreeElement out(a.quiver_);
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) {
      if (auto p = compose(pa, pb)) out.add_term(*p, ca * cb);
    }
  }
  return out;
}

bool operator==(const FreeElement& a, const FreeElement& b) {
  return a.quiver_ == b.quiver_ && a.terms_ == b.terms_;
}

FreeElement pow(const FreeElement& base, unsigned exponent) {
  FreeElement result = FreeElement::one(base.quiver_ptr());
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

std::string format_term(const Polynomial& coefficient, const std::string& rest, bool first) {
  std::string sign;
  std::string body;
  const bool single = coefficient.size() == 1;
  const bool constant = coefficient.is_constant();
  if (constant) {
    const Rational c = coefficient.constant_value();
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    sign = negative ? "-" : "+";
    if (magnitude == Rational(1)) {
      body = rest.empty() ? "1" : rest;
    } else {
      body = magnitude.to_string() + (rest.empty() ? "" : "*" + rest);
    }
  } else if (single && coefficient.terms().front().second.sign() < 0) {
    sign = "-";
    body = (-coefficient).to_string() + (rest.empty() ? "" : "*" + rest);
  } else {
    sign = "+";
    const std::string c = single ? coefficient.to_string() : "(" + coefficient.to_string() + ")";
    body = c + (rest.empty() ? "" : "*" + rest);
  }
  if (first) return sign == "-" ? "- " + body : body;
  return " " + sign + " " + body;
}

std::string FreeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    out += format_term(c, quiver_->path_to_string(p), first);
    first = false;
  }
  return out;
}

GeneratorMap::GeneratorMap(std::shared_ptr<const Quiver> source, std::shared_ptr<const Quiver> target,
                           std::map<Vertex, Vertex> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), vertex_map_(std::move(vertex_map)) {
  for (Vertex v : source_->vertices()) {
    const auto it = vertex_map_.find(v);
    if (it == vertex_map_.end()) throw std::invalid_argument("vertex map misses vertex " + std::to_string(v));
    if (!target_->has_vertex(it->second)) {
      throw std::invalid_argument("vertex map sends " + std::to_string(v) + " outside the target quiver");
    }
  }
}

GeneratorMap GeneratorMap::identity(std::shared_ptr<const Quiver> quiver) {
  std::map<Vertex, Vertex> vm;
  for (Vertex v : quiver->vertices()) vm[v] = v;
  GeneratorMap m(quiver, quiver, vm);
  for (std::size_t id = 0; id < quiver->arrows().size(); ++id) {
    m.bind(quiver->arrows()[id].name, FreeElement(quiver, quiver->arrow_path(static_cast<ArrowId>(id))));
  }
  return m;
}

void GeneratorMap::bind(std::string_view arrow, FreeElement image) {
  const ArrowId id = source_->arrow_id(arrow);
  if (image.quiver_ptr() != target_) throw std::invalid_argument("image of " + std::string(arrow) + " lives elsewhere");
  if (!image.is_endpoint_homogeneous()) {
    throw std::invalid_argument("image of " + std::string(arrow) + " is not endpoint-homogeneous");
  }
  if (!image.is_zero()) {
    const Path& p = image.terms().begin()->first;
    const Arrow& a = source_->arrow(id);
    if (p.source != vertex_map_.at(a.source) || p.target != vertex_map_.at(a.target)) {
      throw std::invalid_argument("image of " + std::string(arrow) + " is not parallel to the arrow");
    }
  }
  bindings_.insert_or_assign(id, std::move(image));
}

const FreeElement& GeneratorMap::image(ArrowId id) const {
  const auto it = bindings_.find(id);
  if (it == bindings_.end()) throw std::invalid_argument("arrow " + source_->arrow(id).name + " is not bound");
  return it->second;
}

FreeElement substitute(const GeneratorMap& m, const FreeElement& e) {
  if (&e.quiver() != &m.source()) throw std::invalid_argument("element does not live on the map's source quiver");
  FreeElement out(m.target_ptr());
  for (const auto& [p, c] : e.terms()) {
    if (p.is_stationary()) {
      out.add_term(m.target().idempotent(m.image(p.source)), c);
      continue;
    }
    FreeElement image = m.image(p.arrows.front());
    for (std::size_t k = 1; k < p.arrows.size() && !image.is_zero(); ++k) image = image * m.image(p.arrows[k]);
    out += c * image;
  }
  return out;
}

}  // namespace preproj
