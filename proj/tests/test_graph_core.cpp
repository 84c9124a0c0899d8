#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "etc/canonical.hpp"
#include "etc/graph.hpp"

using namespace etc;

namespace {

// O(n^4) scan over vertex quadruples, independent of girth_cycles.
std::set<std::set<std::pair<int, int>>> brute_four_cycles(const Graph& g) {
  std::set<std::set<std::pair<int, int>>> out;
  const int n = g.order();
  auto e = [](int a, int b) { return std::pair{std::min(a, b), std::max(a, b)}; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (std::set<int>{a, b, c, d}.size() != 4) continue;
          if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && g.adjacent(d, a))
            out.insert({e(a, b), e(b, c), e(c, d), e(d, a)});
        }
  return out;
}

std::set<std::set<std::pair<int, int>>> as_edge_sets(const std::vector<std::array<VertexId, 4>>& cs) {
  std::set<std::set<std::pair<int, int>>> out;
  auto e = [](int a, int b) { return std::pair{std::min(a, b), std::max(a, b)}; };
  for (auto [a, b, c, d] : cs) out.insert({e(a, b), e(b, c), e(c, d), e(d, a)});
  return out;
}

Graph random_relabel(const Graph& g, std::mt19937& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

// Two cubes with one edge removed from each, rejoined across: a 2-edge cut.
Graph bridged_cubes() {
  Graph two = disjoint_union(cube_graph(), cube_graph());
  std::vector<Edge> es;
  for (const auto& e : two.edges())
    if (!(e == Edge{0, 1}) && !(e == Edge{8, 9})) es.push_back(e);
  es.push_back({0, 8});
  es.push_back({1, 9});
  return Graph(16, es);
}

}  // namespace

TEST_CASE("graph rejects loops and repeated edges") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), Error);
  CHECK_THROWS_AS(CubicGraph(Graph(4, {{0, 1}, {1, 2}, {2, 3}})), Error);
}

TEST_CASE("edge ids follow the sorted edge list") {
  const Graph g(4, {{2, 3}, {1, 0}, {0, 2}});
  REQUIRE(g.size() == 3);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{0, 2});
  CHECK(g.edge(2) == Edge{2, 3});
  CHECK(g.edge_id(3, 2) == 2);
  CHECK(g.edge_id(1, 3) == -1);
}

TEST_CASE("girth of small graphs") {
  CHECK(girth(cube_graph()) == 4);
  CHECK(girth(k4_graph()) == 3);
  CHECK(girth(prism_graph(8)) == 4);
  CHECK(girth(k33_graph()) == 4);
  CHECK(girth(Graph(3, {{0, 1}, {1, 2}})) == kAcyclic);
}

TEST_CASE("four-cycle counts") {
  CHECK(girth_cycles(cube_graph()).size() == 6);
  CHECK(girth_cycles(k33_graph()).size() == 9);
  CHECK(girth_cycles(prism_graph(8)).size() == 8);
  CHECK_THROWS_AS(girth_cycles(k4_graph()), Error);
}

TEST_CASE("girth_cycles agrees with a quadruple scan on every enumerated graph") {
  for (int n = 6; n <= 14; n += 2)
    for (const auto& g : enumerate_cubic_girth4(n)) {
      const auto cs = girth_cycles(g);
      CHECK(cs.size() == as_edge_sets(cs).size());
      CHECK(as_edge_sets(cs) == brute_four_cycles(g));
    }
}

TEST_CASE("edge connectivity") {
  CHECK(edge_connectivity(cube_graph()) == 3);
  CHECK(edge_connectivity(bridged_cubes()) == 2);
  CHECK(edge_connectivity(disjoint_union(cube_graph(), cube_graph())) == 0);
  for (int k = 3; k <= 12; ++k) CHECK(edge_connectivity(prism_graph(k)) == 3);
  for (const auto& g : enumerate_cubic_girth4(12)) CHECK(edge_connectivity(g) <= 3);
}

TEST_CASE("canonical form separates and identifies") {
  std::mt19937 rng(20240601);
  const std::vector<Graph> fixtures{cube_graph(), k33_graph(), prism_graph(8), prism_graph(5), bridged_cubes()};
  for (const auto& g : fixtures)
    for (int i = 0; i < 100; ++i) CHECK(canonical_form(random_relabel(g, rng)) == canonical_form(g));
  CHECK_FALSE(canonical_form(cube_graph()) == canonical_form(k33_graph()));
  CHECK_FALSE(isomorphic(cube_graph(), prism_graph(8)));
  CHECK(isomorphic(cube_graph(), prism_graph(4)));
}

TEST_CASE("canonical labeling maps the graph onto its form") {
  std::mt19937 rng(7);
  const Graph g = random_relabel(prism_graph(6), rng);
  const auto r = canonical_labeling(g);
  CHECK(canonical_form(relabel(g, r.labeling)) == r.form);
  CHECK(relabel(g, r.labeling).edges() == r.form.edges);
}

TEST_CASE("enumeration counts match the published tables") {
  // Connected cubic graphs of girth at least 4 minus those of girth at least 5.
  const std::vector<std::pair<int, std::size_t>> counts{{6, 1}, {8, 2}, {10, 5}, {12, 20}, {14, 101}};
  for (auto [n, c] : counts) CHECK(enumerate_cubic_girth4(n).size() == c);
}

TEST_CASE("enumerated graphs are cubic, girth 4, connected and pairwise distinct") {
  for (int n = 6; n <= 12; n += 2) {
    std::set<std::string> keys;
    for (const auto& g : enumerate_cubic_girth4(n)) {
      CHECK(g.is_cubic());
      CHECK(girth(g) == 4);
      CHECK(is_connected(g));
      keys.insert(canonical_form(g).key());
    }
    CHECK(keys.size() == enumerate_cubic_girth4(n).size());
  }
  const auto six = enumerate_cubic_girth4(6);
  REQUIRE(six.size() == 1);
  CHECK(isomorphic(six[0], k33_graph()));
  bool has_cube = false;
  for (const auto& g : enumerate_cubic_girth4(8)) has_cube |= isomorphic(g, cube_graph());
  CHECK(has_cube);
}

TEST_CASE("enumeration rejects odd orders and orders above the ceiling") {
  CHECK_THROWS_AS(enumerate_cubic_girth4(7), Error);
  CHECK_THROWS_AS(enumerate_cubic_girth4(18), Error);
}

TEST_CASE("named graph constructors") {
  CHECK(hypercube_graph(4).order() == 16);
  CHECK(hypercube_graph(4).size() == 32);
  const Graph p = cartesian_with_k2(cube_graph());
  CHECK(isomorphic(p, hypercube_graph(4)));
  CHECK(prism_graph(5).is_cubic());
}
