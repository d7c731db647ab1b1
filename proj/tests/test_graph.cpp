#include <limits>
#include <vector>

#include "doctest.h"
#include "sholes/error.hpp"
#include "sholes/graph.hpp"
#include "test_util.hpp"

using namespace sholes;

TEST_CASE("labels intern in first-appearance order") {
  Graph g = tst::undirected({{"X", "A"}, {"A", "M"}, {"M", "X"}});
  CHECK(g.n() == 3);
  CHECK(g.label(0) == "X");
  CHECK(g.label(1) == "A");
  CHECK(g.label(2) == "M");
  CHECK(g.index_of("M") == Index{2});
  CHECK_FALSE(g.index_of("Q").has_value());
  CHECK(g.edge_count() == 3);
  CHECK_FALSE(g.directed());
  CHECK_FALSE(g.weighted());
}

TEST_CASE("undirected adjacency is stored symmetrically") {
  Graph g = tst::undirected({{"A", "B"}, {"B", "C"}});
  const SparseMatrix& a = g.adjacency();
  CHECK(a.nnz() == 4);
  CHECK(a.at(0, 1) == 1.0);
  CHECK(a.at(1, 0) == 1.0);
  CHECK(a.at(1, 2) == 1.0);
  CHECK(a.at(2, 1) == 1.0);
  CHECK(a.at(0, 2) == 0.0);
  CHECK(transpose(a) == a);
}

TEST_CASE("seeded labels allow isolated nodes") {
  std::vector<Edge> edges = {{"B", "C", 1.0}};
  Graph g = build_graph(edges, false, false, {"A", "B", "C", "D"});
  CHECK(g.n() == 4);
  CHECK(g.label(0) == "A");
  CHECK(g.adjacency().row_nnz(0) == 0);
  CHECK(g.adjacency().row_nnz(3) == 0);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("construction rejects invalid edges") {
  std::vector<Edge> self = {{"A", "A", 1.0}};
  try {
    build_graph(self, false, false);
    FAIL("self-loop accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SelfLoop);
  }

  std::vector<Edge> dup = {{"A", "B", 1.0}, {"A", "B", 1.0}};
  CHECK_THROWS_AS(build_graph(dup, false, false), Error);

  // An undirected edge given in both orientations is a duplicate too.
  std::vector<Edge> both = {{"A", "B", 1.0}, {"B", "A", 1.0}};
  CHECK_THROWS_AS(build_graph(both, false, false), Error);
  // ... but two directed edges in opposite directions are fine.
  CHECK(build_graph(both, true, false).edge_count() == 2);

  std::vector<Edge> nonfinite = {{"A", "B",
                                  std::numeric_limits<double>::infinity()}};
  CHECK_THROWS_AS(build_graph(nonfinite, false, true), Error);

  std::vector<Edge> heavy = {{"A", "B", 2.0}};
  CHECK_THROWS_AS(build_graph(heavy, false, false), Error);
  CHECK_NOTHROW(build_graph(heavy, false, true));
}

TEST_CASE("degree vector of the seven-node fixture") {
  Graph g = tst::fig_ego7();
  DegreeVector d = degree_vector(g);
  auto deg = [&](const char* label) {
    return d.d[static_cast<std::size_t>(*g.index_of(label))];
  };
  CHECK(deg("A") == 4);
  CHECK(deg("B") == 3);
  CHECK(deg("C") == 1);
  CHECK(deg("D") == 2);
  CHECK(deg("E") == 2);
  CHECK(deg("F") == 2);
  CHECK(deg("G") == 6);

  Graph k4 = tst::undirected(
      {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"},
       {"c", "d"}});
  CHECK(degree_vector(k4).d == std::vector<double>{3, 3, 3, 3});

  Graph w = tst::weighted_undirected({{"a", "b", 0.5}});
  CHECK_THROWS_AS(degree_vector(w), Error);
  Graph dir = tst::directed({{"a", "b"}});
  CHECK_THROWS_AS(degree_vector(dir), Error);
}

TEST_CASE("binarize maps nonzero weights to unit weights") {
  Graph w = tst::weighted_undirected({{"a", "b", 2.5}, {"b", "c", -0.25}});
  Graph b = binarize(w);
  CHECK_FALSE(b.weighted());
  CHECK(b.adjacency().at(0, 1) == 1.0);
  CHECK(b.adjacency().at(1, 2) == 1.0);
  CHECK(b.edge_count() == 2);
  CHECK(b.labels() == w.labels());

  Graph bb = binarize(b);
  CHECK(bb.adjacency() == b.adjacency());
}

TEST_CASE("coerce_binary_undirected symmetrizes directed input") {
  Graph dir = tst::weighted_directed({{"a", "b", 3.0}, {"c", "b", 0.5}});
  Graph u = coerce_binary_undirected(dir);
  CHECK_FALSE(u.directed());
  CHECK_FALSE(u.weighted());
  CHECK(u.adjacency().at(0, 1) == 1.0);
  CHECK(u.adjacency().at(1, 0) == 1.0);
  CHECK(u.adjacency().at(1, 2) == 1.0);
  CHECK(u.adjacency().at(2, 1) == 1.0);
  CHECK(u.edge_count() == 2);
  CHECK_NOTHROW(degree_vector(u));
}

TEST_CASE("graph_from_adjacency validates invariants") {
  SparseMatrix asym = SparseMatrix::from_triplets(2, 2, {{0, 1, 1.0}});
  CHECK_THROWS_AS(graph_from_adjacency(asym, {"a", "b"}, false, false),
                  Error);
  CHECK_NOTHROW(graph_from_adjacency(asym, {"a", "b"}, true, false));

  SparseMatrix loop = SparseMatrix::from_triplets(
      2, 2, {{0, 0, 1.0}, {0, 1, 1.0}, {1, 0, 1.0}});
  CHECK_THROWS_AS(graph_from_adjacency(loop, {"a", "b"}, true, false), Error);

  SparseMatrix heavy = SparseMatrix::from_triplets(
      2, 2, {{0, 1, 2.0}, {1, 0, 2.0}});
  CHECK_THROWS_AS(graph_from_adjacency(heavy, {"a", "b"}, false, false),
                  Error);
  CHECK_NOTHROW(graph_from_adjacency(heavy, {"a", "b"}, false, true));

  SparseMatrix ok = SparseMatrix::from_triplets(
      2, 2, {{0, 1, 1.0}, {1, 0, 1.0}});
  CHECK_THROWS_AS(graph_from_adjacency(ok, {"a"}, false, false), Error);
  CHECK_THROWS_AS(graph_from_adjacency(ok, {"a", "a"}, false, false), Error);
}
