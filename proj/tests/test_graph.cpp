#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "wlplab/graph.hpp"

using namespace wlplab;

namespace {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> d;
  for (std::size_t v = 1; v <= g.vertex_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("vertex sets order as integers with vertex 1 lowest") {
    VertexSet a(70), b(70);
    a.set(0);
    a.set(1);
    b.set(2);
    CHECK(a < b);
    VertexSet c(70);
    c.set(65);
    CHECK(b < c);
    CHECK(c.count() == 1);
    CHECK(c.first() == 65);
    CHECK(c.next(66) == 70);
    CHECK((a | b).indices() == std::vector<std::size_t>{0, 1, 2});
    CHECK_FALSE(a.intersects(b));
  }

  TEST_CASE("constructor rejects loops, duplicates and bad endpoints") {
    CHECK_THROWS_AS(Graph(3, Edges{{1, 1}}), ConstraintError);
    CHECK_THROWS_AS(Graph(3, Edges{{1, 2}, {2, 1}}), ConstraintError);
    CHECK_THROWS_AS(Graph(3, Edges{{1, 4}}), ConstraintError);
    CHECK_THROWS_AS(Graph(3, Edges{{0, 2}}), ConstraintError);
  }

  TEST_CASE("families have the documented edges") {
    CHECK(path_graph(3).edges() == Edges{{1, 2}, {2, 3}});
    auto ce = ce_graph(6);
    CHECK(ce.edge_count() == 7);
    CHECK(ce.has_edge(4, 6));
    CHECK(pan_graph(6).has_edge(6, 7));
    CHECK(pan_graph(6).edge_count() == 7);
    auto t = tadpole3_graph(5);
    CHECK(t.vertex_count() == 8);
    CHECK(t.edge_count() == 8);
    CHECK(t.has_edge(3, 4));
    CHECK(t.has_edge(1, 3));
    auto bk = bk_graph(1, 2);
    CHECK(bk.vertex_count() == 3);
    CHECK(bk.edges() == Edges{{1, 2}, {2, 3}});
    CHECK(bk == path_graph(3));
  }

  TEST_CASE("family edge counts") {
    for (long n = 1; n <= 12; ++n) {
      CHECK(path_graph(n).edge_count() == static_cast<std::size_t>(n - 1));
      CHECK(tadpole3_graph(n).edge_count() == static_cast<std::size_t>(n + 3));
      CHECK(complete_graph(n).edge_count() == static_cast<std::size_t>(n * (n - 1) / 2));
      CHECK(empty_graph(n).edge_count() == 0);
    }
    for (long n = 3; n <= 12; ++n) {
      CHECK(cycle_graph(n).edge_count() == static_cast<std::size_t>(n));
      CHECK(pan_graph(n).edge_count() == static_cast<std::size_t>(n + 1));
    }
    for (long n = 4; n <= 12; ++n) CHECK(ce_graph(n).edge_count() == static_cast<std::size_t>(n + 1));
    for (long n = 2; n <= 9; ++n)
      for (long m = 1; m < n; ++m) CHECK(bk_graph(m, n).edge_count() == static_cast<std::size_t>(m * (n - m) + m));
  }

  TEST_CASE("family constraints") {
    CHECK_THROWS_AS(path_graph(0), ConstraintError);
    CHECK_THROWS_AS(cycle_graph(2), ConstraintError);
    CHECK_THROWS_AS(ce_graph(3), ConstraintError);
    CHECK_THROWS_AS(pan_graph(2), ConstraintError);
    CHECK_THROWS_AS(tadpole3_graph(0), ConstraintError);
    CHECK_THROWS_AS(bk_graph(2, 2), ConstraintError);
    CHECK_THROWS_AS(bk_graph(0, 2), ConstraintError);
  }

  TEST_CASE("vertex deletion relabels stably") {
    CHECK(delete_closed_neighborhood(path_graph(3), 2).vertex_count() == 0);
    CHECK(delete_closed_neighborhood(cycle_graph(5), 1) == path_graph(2));
    CHECK(delete_vertex(cycle_graph(4), 1) == path_graph(3));
    for (long n = 2; n <= 20; ++n) CHECK(delete_vertex(path_graph(n), n) == path_graph(n - 1));
    for (long n = 5; n <= 20; ++n) {
      CHECK(delete_vertex(ce_graph(n), n) == path_graph(n - 1));
      CHECK(delete_closed_neighborhood(ce_graph(n), n) == path_graph(n - 4));
    }
    CHECK_THROWS_AS(delete_vertex(path_graph(3), 4), ConstraintError);
    CHECK_THROWS_AS(delete_closed_neighborhood(path_graph(3), 0), ConstraintError);
  }

  TEST_CASE("disjoint union") {
    auto u = disjoint_union(complete_graph(2), complete_graph(2));
    CHECK(u.edges() == Edges{{1, 2}, {3, 4}});
    CHECK(disjoint_union(empty_graph(1), empty_graph(1)) == empty_graph(2));
    CHECK(disjoint_union(path_graph(2), path_graph(3)).edge_count() == 3);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      auto a = oracle::random_graph(1 + rng() % 6, 0.4, rng);
      auto b = oracle::random_graph(1 + rng() % 6, 0.4, rng);
      auto c = oracle::random_graph(1 + rng() % 6, 0.4, rng);
      auto left = disjoint_union(disjoint_union(a, b), c);
      auto right = disjoint_union(a, disjoint_union(b, c));
      CHECK(left.vertex_count() == right.vertex_count());
      CHECK(degrees(left) == degrees(right));
    }
  }

  TEST_CASE("edge list round trip and validation") {
    auto g = tadpole3_graph(4);
    CHECK(read_edge_list(write_edge_list(g)) == g);
    CHECK(read_edge_list("# comment\n3\n1 2\n\n2 3\n") == path_graph(3));
    CHECK_THROWS_AS(read_edge_list("3\n2 1\n"), ConstraintError);
    CHECK_THROWS_AS(read_edge_list("3\n1 2\n1 2\n"), ConstraintError);
    CHECK_THROWS_AS(read_edge_list("3\n1 5\n"), ConstraintError);
    CHECK_THROWS(read_edge_list("x\n"));
  }

  TEST_CASE("induced subgraph and closed neighbourhood") {
    auto g = cycle_graph(6);
    VertexSet s(6);
    s.set(0);
    auto closed = g.closed_neighborhood(s);
    CHECK(closed.indices() == std::vector<std::size_t>{0, 1, 5});
    VertexSet keep(6);
    for (std::size_t v : {1, 2, 3}) keep.set(v);
    CHECK(g.induced(keep) == path_graph(3));
    CHECK(g.is_independent(s));
    s.set(1);
    CHECK_FALSE(g.is_independent(s));
  }
}
