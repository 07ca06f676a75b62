#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "preproj/e6.hpp"
#include "preproj/quiver.hpp"
#include "support/generators.hpp"

namespace preproj {
namespace {

using testing::Gen;
using testing::kCases;

const Quiver& e6q() { return *builtin_quiver(BuiltinQuiver::E6); }
const Quiver& l2q() { return *builtin_quiver(BuiltinQuiver::L2); }

Path arrow(const Quiver& q, std::string_view name) { return q.arrow_path(q.arrow_id(name)); }

TEST(BuiltinQuiver, E6HasSixVerticesAndTenArrows) {
  EXPECT_EQ(e6q().vertices().size(), 6u);
  EXPECT_EQ(e6q().arrows().size(), 10u);
}

TEST(BuiltinQuiver, L2HasOneVertexAndTwoLoops) {
  ASSERT_EQ(l2q().vertices().size(), 1u);
  ASSERT_EQ(l2q().arrows().size(), 2u);
  for (const auto& a : l2q().arrows()) {
    EXPECT_EQ(a.source, a.target);
  }
  EXPECT_EQ(l2q().arrows()[0].name, "x");
  EXPECT_EQ(l2q().arrows()[1].name, "y");
}

TEST(BuiltinQuiver, E6ArrowTable) {
  const Quiver& q = e6q();
  const std::vector<std::tuple<std::string, Vertex, Vertex>> expected = {
      {"a0", 0, 3}, {"b0", 3, 0}, {"a1", 1, 2}, {"b1", 2, 1}, {"a2", 2, 3},
      {"b2", 3, 2}, {"a3", 3, 4}, {"b3", 4, 3}, {"a4", 4, 5}, {"b4", 5, 4}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& [name, s, t] = expected[i];
    EXPECT_EQ(q.arrow(static_cast<ArrowId>(i)).name, name);
    EXPECT_EQ(q.arrow(static_cast<ArrowId>(i)).source, s) << name;
    EXPECT_EQ(q.arrow(static_cast<ArrowId>(i)).target, t) << name;
  }
}

TEST(BuiltinQuiver, AdjacencyListing) {
  const std::string listing = e6q().adjacency_listing();
  EXPECT_NE(listing.find("a0: 0 -> 3\n"), std::string::npos);
  EXPECT_NE(listing.find("b4: 5 -> 4\n"), std::string::npos);
  EXPECT_EQ(l2q().adjacency_listing(), "x: 0 -> 0\ny: 0 -> 0\n");
}

TEST(PathCompose, LoopAtVertexTwo) {
  const auto p = compose(arrow(e6q(), "a2"), arrow(e6q(), "b2"));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->source, 2);
  EXPECT_EQ(p->target, 2);
  EXPECT_EQ(e6q().path_to_string(*p), "a2*b2");
}

TEST(PathCompose, IdempotentIsIdentity) {
  const auto p = compose(e6q().idempotent(3), arrow(e6q(), "b0"));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, arrow(e6q(), "b0"));
}

TEST(PathCompose, EndpointMismatchIsNotComposable) {
  EXPECT_FALSE(compose(arrow(e6q(), "a1"), arrow(e6q(), "a0")).has_value());
}

TEST(PathOf, RejectsNonComposableSequences) {
  EXPECT_EQ(e6q().path_to_string(e6q().path_of({"b0", "a0", "b2", "a2"})), "b0*a0*b2*a2");
  EXPECT_THROW((void)e6q().path_of({"a2", "a1"}), std::invalid_argument);
  EXPECT_THROW((void)e6q().arrow_id("c7"), std::invalid_argument);
  EXPECT_EQ(e6q().path_to_string(e6q().idempotent(4)), "e4");
}

TEST(EnumeratePaths, E6LoopsAtZeroOfLengthTwo) {
  const auto paths = enumerate_paths(e6q(), 0, 0, 2);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(e6q().path_to_string(paths[0]), "a0*b0");
}

TEST(EnumeratePaths, TwoLoopWordsOfLengthTwo) {
  const auto paths = enumerate_paths(l2q(), 0, 0, 2);
  std::vector<std::string> words;
  for (const auto& p : paths) words.push_back(l2q().path_to_string(p));
  EXPECT_EQ(words, (std::vector<std::string>{"x*x", "x*y", "y*x", "y*y"}));
}

TEST(EnumeratePaths, NoArrowFromZeroToFive) {
  EXPECT_TRUE(enumerate_paths(e6q(), 0, 5, 1).empty());
}

TEST(EnumeratePaths, LengthZeroIsTheIdempotent) {
  const auto same = enumerate_paths(e6q(), 2, 2, 0);
  ASSERT_EQ(same.size(), 1u);
  EXPECT_TRUE(same[0].is_stationary());
  EXPECT_TRUE(enumerate_paths(e6q(), 2, 3, 0).empty());
}

TEST(EnumeratePaths, UnknownVertexThrows) {
  EXPECT_THROW((void)enumerate_paths(e6q(), 0, 9, 1), std::invalid_argument);
}

// Exhaustiveness: counts match powers of the adjacency matrix.
TEST(EnumeratePaths, CountsMatchAdjacencyPowers) {
  const Quiver& q = e6q();
  const std::size_t n = q.vertices().size();
  std::vector<std::vector<std::size_t>> adj(n, std::vector<std::size_t>(n, 0));
  for (const auto& a : q.arrows()) ++adj[static_cast<std::size_t>(a.source)][static_cast<std::size_t>(a.target)];
  std::vector<std::vector<std::size_t>> power(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
  for (std::size_t len = 0; len <= 7; ++len) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto paths = enumerate_paths(q, static_cast<Vertex>(i), static_cast<Vertex>(j), len);
        EXPECT_EQ(paths.size(), power[i][j]) << i << "->" << j << " length " << len;
        for (std::size_t k = 1; k < paths.size(); ++k) EXPECT_LT(paths[k - 1], paths[k]);
      }
    }
    std::vector<std::vector<std::size_t>> next(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) next[i][j] += power[i][k] * adj[k][j];
    power = next;
  }
}

TEST(PathOrder, LengthThenArrowOrder) {
  const Quiver& q = e6q();
  EXPECT_LT(q.idempotent(5), arrow(q, "a0"));
  EXPECT_LT(arrow(q, "a0"), arrow(q, "b0"));
  EXPECT_LT(arrow(q, "b4"), q.path_of({"a0", "b0"}));
}

TEST(PathProperty, CompositionAssociativeWithIdentities) {
  Gen g(201);
  const Quiver& q = e6q();
  for (int k = 0; k < kCases; ++k) {
    const Path p = g.path(q, static_cast<std::size_t>(g.integer(0, 4)));
    const Path r = g.path(q, static_cast<std::size_t>(g.integer(0, 4)));
    const Path s = g.path(q, static_cast<std::size_t>(g.integer(0, 4)));
    EXPECT_EQ(compose(q.idempotent(p.source), p), p);
    EXPECT_EQ(compose(p, q.idempotent(p.target)), p);
    const auto pr = compose(p, r);
    const auto rs = compose(r, s);
    const auto left = pr ? compose(*pr, s) : std::nullopt;
    const auto right = rs ? compose(p, *rs) : std::nullopt;
    EXPECT_EQ(left, right);
  }
}

TEST(RelationHomogeneity, EveryMeshRelationIsALoopSum) {
  for (const auto& r : e6::pe6_relations().relations) {
    EXPECT_TRUE(r.is_endpoint_homogeneous()) << r.to_string();
    EXPECT_TRUE(r.is_degree_homogeneous()) << r.to_string();
    const Path& p = r.terms().begin()->first;
    EXPECT_EQ(p.source, p.target) << r.to_string();
  }
}

}  // namespace
}  // namespace preproj
