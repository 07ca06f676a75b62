#include "preproj/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace preproj {

namespace {

using PathRow = std::vector<std::pair<Path, Rational>>;
using IndexRow = std::vector<std::pair<int, Rational>>;  // ascending column index

// Incremental reduced row echelon form. Column 0 is the largest path, so the
// leading entry of every row is the largest path it contains.
class Eliminator {
 public:
  void add(const IndexRow& row) {
    std::map<int, Rational> acc(row.begin(), row.end());
    for (const auto& [col, value] : row) {
      const auto p = pivots_.find(col);
      if (p == pivots_.end()) continue;
      for (const auto& [c, v] : p->second) {
        Rational& slot = acc[c];
        slot -= value * v;
      }
    }
    IndexRow reduced;
    for (auto& [c, v] : acc) {
      if (!v.is_zero()) reduced.emplace_back(c, std::move(v));
    }
    if (reduced.empty()) return;

    const int lead = reduced.front().first;
    const Rational inv = Rational(1) / reduced.front().second;
    for (auto& entry : reduced) entry.second *= inv;

    for (auto& [pcol, prow] : pivots_) {
      const auto it = std::find_if(prow.begin(), prow.end(), [lead](const auto& e) { return e.first == lead; });
      if (it == prow.end()) continue;
      const Rational factor = it->second;
      std::map<int, Rational> merged(prow.begin(), prow.end());
      for (const auto& [c, v] : reduced) merged[c] -= factor * v;
      prow.clear();
      for (auto& [c, v] : merged) {
        if (!v.is_zero()) prow.emplace_back(c, std::move(v));
      }
    }
    pivots_.emplace(lead, std::move(reduced));
  }

  [[nodiscard]] const std::map<int, IndexRow>& pivots() const { return pivots_; }

 private:
  std::map<int, IndexRow> pivots_;
};

void validate(const RelationSet& rs) {
  if (!rs.quiver) throw std::invalid_argument("relation set without a quiver");
  for (const auto& r : rs.relations) {
    if (r.quiver_ptr() != rs.quiver) throw std::invalid_argument("relation lives on a different quiver");
    for (const auto& [p, c] : r.terms()) {
      if (!c.is_constant()) throw std::invalid_argument("relation has a non-rational coefficient: " + r.to_string());
    }
    if (!r.is_endpoint_homogeneous()) throw std::invalid_argument("relation is not endpoint-homogeneous: " + r.to_string());
    if (!r.is_degree_homogeneous()) throw std::invalid_argument("relation is not length-homogeneous: " + r.to_string());
  }
}

}  // namespace

std::shared_ptr<const QuotientAlgebra> QuotientAlgebra::build(RelationSet relations, BuildOptions options) {
  validate(relations);
  std::erase_if(relations.relations, [](const FreeElement& r) { return r.is_zero(); });

  std::shared_ptr<QuotientAlgebra> a(new QuotientAlgebra());
  a->relations_ = std::move(relations);
  const Quiver& q = *a->relations_.quiver;

  std::vector<PathRow> ideal;  // spanning rows of the previous degree's ideal component
  std::vector<Path> layer;
  for (Vertex v : q.vertices()) layer.push_back(q.idempotent(v));
  std::sort(layer.begin(), layer.end());

  std::size_t zero_run = 0;
  std::size_t first_zero = 0;
  for (std::size_t d = 0;; ++d) {
    if (d > options.max_degree) {
      throw std::runtime_error("quotient did not terminate below degree " + std::to_string(options.max_degree));
    }
    if (d > 0) {
      std::vector<Path> next;
      for (const auto& p : layer) {
        for (std::size_t id = 0; id < q.arrows().size(); ++id) {
          if (q.arrows()[id].source != p.target) continue;
          Path r{p.source, q.arrows()[id].target, p.arrows};
          r.arrows.push_back(static_cast<ArrowId>(id));
          next.push_back(std::move(r));
        }
        if (next.size() > options.max_paths_per_degree) {
          throw std::runtime_error("more than " + std::to_string(options.max_paths_per_degree) +
                                   " paths in degree " + std::to_string(d) + "; quotient looks infinite");
        }
      }
      std::sort(next.begin(), next.end());
      layer = std::move(next);
    }

    // column 0 = largest path
    std::map<Path, int> column;
    for (std::size_t k = 0; k < layer.size(); ++k) column.emplace(layer[layer.size() - 1 - k], static_cast<int>(k));

    std::map<std::pair<Vertex, Vertex>, Eliminator> blocks;
    auto feed = [&](const PathRow& row) {
      if (row.empty()) return;
      IndexRow ir;
      ir.reserve(row.size());
      for (const auto& [p, c] : row) ir.emplace_back(column.at(p), c);
      std::sort(ir.begin(), ir.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      const Path& p0 = row.front().first;
      blocks[{p0.source, p0.target}].add(ir);
    };

    for (const auto& r : a->relations_.relations) {
      if (r.min_length() != d) continue;
      PathRow row;
      for (const auto& [p, c] : r.terms()) row.emplace_back(p, c.constant_value());
      feed(row);
    }
    for (const auto& row : ideal) {
      const Path& p0 = row.front().first;
      for (std::size_t id = 0; id < q.arrows().size(); ++id) {
        const Path arrow = q.arrow_path(static_cast<ArrowId>(id));
        if (arrow.target == p0.source) {
          PathRow left;
          for (const auto& [p, c] : row) left.emplace_back(*compose(arrow, p), c);
          feed(left);
        }
        if (arrow.source == p0.target) {
          PathRow right;
          for (const auto& [p, c] : row) right.emplace_back(*compose(p, arrow), c);
          feed(right);
        }
      }
    }

    // Survivors in ascending path order get the next basis indices.
    std::vector<bool> is_pivot(layer.size(), false);
    for (const auto& [key, elim] : blocks) {
      for (const auto& [col, row] : elim.pivots()) is_pivot[static_cast<std::size_t>(col)] = true;
    }
    std::size_t survivors = 0;
    for (std::size_t k = layer.size(); k-- > 0;) {
      if (is_pivot[k]) continue;
      const Path& p = layer[layer.size() - 1 - k];
      a->index_.emplace(p, a->basis_.size());
      a->basis_.push_back(p);
      ++survivors;
    }

    ideal.clear();
    for (const auto& [key, elim] : blocks) {
      for (const auto& [col, row] : elim.pivots()) {
        PathRow prow;
        SparseVector reduction;
        for (const auto& [c, v] : row) {
          const Path& p = layer[layer.size() - 1 - static_cast<std::size_t>(c)];
          prow.emplace_back(p, v);
          if (c != col) reduction.emplace_back(a->index_.at(p), -v);
        }
        std::sort(reduction.begin(), reduction.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        for (const auto& [i, v] : reduction) a->integral_ = a->integral_ && v.is_integer();
        a->reductions_.emplace(layer[layer.size() - 1 - static_cast<std::size_t>(col)], std::move(reduction));
        ideal.push_back(std::move(prow));
      }
    }

    if (survivors == 0) {
      if (zero_run == 0) first_zero = d;
      if (++zero_run == 2) break;
    } else {
      zero_run = 0;
    }
  }
  a->nilpotency_degree_ = first_zero;
  // Paths of the two all-zero degrees are not kept in the table.
  std::erase_if(a->reductions_, [&](const auto& kv) { return kv.first.length() >= a->nilpotency_degree_; });

  const std::size_t n = a->basis_.size();
  a->products_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto p = compose(a->basis_[i], a->basis_[j]);
      if (!p) continue;
      a->products_[i * n + j] = a->reduce(*p);
    }
  }
  return a;
}

std::size_t QuotientAlgebra::dimension_at(Vertex i, Vertex j) const {
  if (!quiver().has_vertex(i)) throw std::invalid_argument("unknown vertex " + std::to_string(i));
  if (!quiver().has_vertex(j)) throw std::invalid_argument("unknown vertex " + std::to_string(j));
  return static_cast<std::size_t>(
      std::count_if(basis_.begin(), basis_.end(), [&](const Path& p) { return p.source == i && p.target == j; }));
}

std::optional<std::size_t> QuotientAlgebra::basis_index(const Path& p) const {
  const auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVector QuotientAlgebra::reduce(const Path& p) const {
  if (p.length() >= nilpotency_degree_) return {};
  if (auto i = basis_index(p)) return {{*i, Rational(1)}};
  return reductions_.at(p);
}

CornerAlgebra QuotientAlgebra::corner(Vertex v) const {
  if (!quiver().has_vertex(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v));
  CornerAlgebra c;
  c.vertex = v;
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].source == v && basis_[i].target == v) {
      local.emplace(i, c.basis.size());
      c.global_index.push_back(i);
      c.basis.push_back(basis_[i]);
    }
  }
  const std::size_t n = c.basis.size();
  c.product.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, value] : product(c.global_index[i], c.global_index[j])) {
        c.product[i * n + j].emplace_back(local.at(k), value);
      }
    }
  }
  return c;
}

QuotientElement QuotientAlgebra::normal_form(const FreeElement& e) const {
  if (e.quiver_ptr() != quiver_ptr()) throw std::invalid_argument("element lives on a different quiver");
  std::map<std::size_t, Polynomial> acc;
  for (const auto& [p, c] : e.terms()) {
    if (p.length() >= nilpotency_degree_) continue;
    if (auto i = basis_index(p)) {
      acc[*i] += c;
      continue;
    }
    for (const auto& [i, v] : reductions_.at(p)) {
      Polynomial term = c;
      term *= v;
      acc[i] += term;
    }
  }
  std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
  return QuotientElement(shared_from_this(), std::move(acc));
}

QuotientElement QuotientAlgebra::zero() const { return QuotientElement(shared_from_this(), {}); }

QuotientElement QuotientAlgebra::generator(std::size_t basis_index) const {
  if (basis_index >= basis_.size()) throw std::out_of_range("basis index out of range");
  return QuotientElement(shared_from_this(), {{basis_index, Polynomial(1)}});
}

QuotientElement::QuotientElement(std::shared_ptr<const QuotientAlgebra> algebra, Coordinates coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  std::erase_if(coords_, [](const auto& kv) { return kv.second.is_zero(); });
}

Polynomial QuotientElement::coordinate(std::size_t i) const {
  const auto it = coords_.find(i);
  return it == coords_.end() ? Polynomial() : it->second;
}

FreeElement QuotientElement::lift() const {
  FreeElement e(algebra_->quiver_ptr());
  for (const auto& [i, c] : coords_) e.add_term(algebra_->basis_path(i), c);
  return e;
}

void QuotientElement::require_same_algebra(const QuotientElement& o) const {
  if (algebra_ != o.algebra_) throw std::invalid_argument("elements live in different quotient algebras");
}

void QuotientElement::add(std::size_t i, const Polynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coords_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

QuotientElement& QuotientElement::operator+=(const QuotientElement& o) {
  require_same_algebra(o);
  for (const auto& [i, c] : o.coords_) add(i, c);
  return *this;
}

QuotientElement& QuotientElement::operator-=(const QuotientElement& o) {
  require_same_algebra(o);
  for (const auto& [i, c] : o.coords_) add(i, -c);
  return *this;
}

QuotientElement& QuotientElement::operator*=(const Polynomial& c) {
  if (c.is_zero()) {
    coords_.clear();
    return *this;
  }
  for (auto& [i, coef] : coords_) coef *= c;
  return *this;
}

QuotientElement operator*(const QuotientElement& a, const QuotientElement& b) {
  a.require_same_algebra(b);
  QuotientElement out(a.algebra_, {});
  for (const auto& [i, ci] : a.coords_) {
    for (const auto& [j, cj] : b.coords_) {
      const SparseVector& prod = a.algebra_->product(i, j);
      if (prod.empty()) continue;
      const Polynomial cij = ci * cj;
      for (const auto& [k, v] : prod) {
        Polynomial term = cij;
        term *= v;
        out.add(k, term);
      }
    }
  }
  return out;
}

bool operator==(const QuotientElement& a, const QuotientElement& b) {
  return a.algebra_ == b.algebra_ && a.coords_ == b.coords_;
}

std::string QuotientElement::to_string() const { return lift().to_string(); }

QuotientElement substitute(const QuotientElement& e, const std::map<Indeterminate, Polynomial>& bindings) {
  QuotientElement::Coordinates coords;
  for (const auto& [i, c] : e.coordinates()) coords.emplace(i, substitute(c, bindings));
  return QuotientElement(e.algebra_ptr(), std::move(coords));
}

}  // namespace preproj
