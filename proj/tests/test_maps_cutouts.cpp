#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "etc/canonical.hpp"
#include "etc/families.hpp"
#include "etc/map.hpp"

using namespace etc;

namespace {

int belt_total(const CombinatorialMap& m) {
  const auto ls = belt_lengths(m);
  return std::accumulate(ls.begin(), ls.end(), 0);
}

std::vector<int> sorted_belts(const CombinatorialMap& m) {
  auto ls = belt_lengths(m);
  std::sort(ls.begin(), ls.end());
  return ls;
}

// Every face of a map drawn from these fixtures obeys dart conservation and
// an even Euler characteristic.
void check_map_invariants(const CombinatorialMap& m) {
  CHECK(belt_total(m) == 2 * m.graph().size());
  const int chi = m.graph().order() - m.graph().size() + static_cast<int>(trace_belts(m).size());
  CHECK(chi % 2 == 0);
  CHECK(euler_genus(m) >= 0);
}

}  // namespace

TEST_CASE("cube faces") {
  const auto q = q3();
  REQUIRE(q.map);
  const auto belts = trace_belts(*q.map);
  CHECK(belts.size() == 6);
  for (const auto& b : belts) CHECK(b.length() == 4);
  CHECK(euler_genus(*q.map) == 0);
  check_map_invariants(*q.map);
}

TEST_CASE("belts walk closed face boundaries") {
  const auto t = truncated_square_tiling();
  for (const auto& b : trace_belts(*t.map)) {
    REQUIRE(b.vertices.size() == b.edges.size());
    for (int i = 0; i < b.length(); ++i) {
      const auto e = t.graph.edge(b.edges[i]);
      const VertexId a = b.vertices[i], c = b.vertices[(i + 1) % b.length()];
      CHECK(((e.u == a && e.v == c) || (e.u == c && e.v == a)));
    }
  }
}

TEST_CASE("truncated square tiling on the torus") {
  const auto t = truncated_square_tiling();
  REQUIRE(t.map);
  CHECK(t.graph.order() == 16);
  CHECK(euler_genus(*t.map) == 1);
  const auto ls = sorted_belts(*t.map);
  CHECK(std::all_of(ls.begin(), ls.end(), [](int l) { return l == 4 || l == 8; }));
  CHECK(std::count(ls.begin(), ls.end(), 8) == 4);
  check_map_invariants(*t.map);
}

TEST_CASE("zonogon family maps have the advertised genus") {
  for (int g = 0; g <= 4; ++g) {
    const auto inst = gamma(g);
    REQUIRE(inst.map);
    CHECK(euler_genus(*inst.map) == g);
    for (int l : belt_lengths(*inst.map)) CHECK(l % 4 == 0);
    check_map_invariants(*inst.map);
  }
}

TEST_CASE("oct xcutouts realize the planar cube") {
  for (bool right : {false, true}) {
    const auto r = realize(oct_cutout(right));
    CHECK(isomorphic(r.map.graph(), cube_graph()));
    CHECK(euler_genus(r.map) == 0);
    CHECK(r.colors.complete());
  }
}

TEST_CASE("mismatched boundary vertices are rejected") {
  Cutout c = tess_left_cutout();
  const auto it = std::find_if(c.vertices.begin(), c.vertices.end(),
                               [&](const CutoutVertex& v) { return v.at.x == c.width && v.at.y == 1; });
  REQUIRE(it != c.vertices.end());
  c.vertices.erase(it);
  CHECK_THROWS_AS(realize(c), Error);
}

TEST_CASE("planar reinterpretations of a bicutout") {
  const Cutout te = te_left_cutout();
  REQUIRE(te.kind == CutoutKind::bicutout);
  CHECK(isomorphic(realize(te).map.graph(), cube_graph()));
  CHECK(euler_genus(realize(te).map) == 1);
  for (Axis keep : {Axis::x, Axis::y}) {
    const Cutout r = reinterpret(te, keep);
    CHECK(r.kind == (keep == Axis::x ? CutoutKind::xcutout : CutoutKind::ycutout));
    CHECK(euler_genus(realize(r).map) == 0);
  }
  // Reinterpretation drops exactly the crossing edges of the other side.
  CHECK(reinterpret(te, Axis::x).edges.size() <= te.edges.size());
}

TEST_CASE("stub resolution") {
  // A path collapses to nothing; a cycle with a pendant keeps a loop.
  CHECK(resolve_stubs(Graph(3, {{0, 1}, {1, 2}})).second.empty());
  const auto [n, es] = resolve_stubs(cube_graph());
  CHECK(n == 8);
  CHECK(es.size() == 12);
}

TEST_CASE("toroidal 3-edge-connectivity of the fixtures") {
  // Both drawings of tess and te cut the torus along 4-edge belts, leaving
  // 2-edge cuts in each planar reinterpretation.
  CHECK_FALSE(is_toroidally_3_edge_connected(tess_left_cutout()));
  CHECK_FALSE(is_toroidally_3_edge_connected(te_left_cutout()));
  CHECK_FALSE(is_toroidally_3_edge_connected(klein_bicutout()));
  CHECK(is_toroidally_3_edge_connected(klein_diagonal_bicutout()));
  CHECK(is_toroidally_3_edge_connected(extend(tess_left_cutout(), 2, Axis::y)));
}

TEST_CASE("the two Moebius ladder drawings realize the same toroidal graph") {
  const auto a = realize(klein_bicutout());
  const auto b = realize(klein_diagonal_bicutout());
  CHECK(isomorphic(a.map.graph(), b.map.graph()));
  CHECK(isomorphic(a.map.graph(), self_amalgam_fixture().graph));
  CHECK(euler_genus(a.map) == 1);
  CHECK(euler_genus(b.map) == 1);
  CHECK(sorted_belts(a.map) == std::vector<int>{4, 4, 4, 12});
  CHECK(sorted_belts(b.map) == std::vector<int>{4, 4, 4, 12});
}

TEST_CASE("extension stacks copies") {
  const auto e = from_cutout("q3", 2, extend(oct_cutout(false), 2, Axis::x));
  CHECK(isomorphic(e.graph, prism_graph(8)));
  CHECK(is_etgc(e.graph, e.assignment));
  const auto t2 = realize(extend(tess_left_cutout(), 2, Axis::y));
  CHECK(t2.map.graph().order() == 32);
  CHECK(euler_genus(t2.map) == 1);
}

TEST_CASE("neighbor orders round-trip through a map") {
  const auto t = truncated_square_tiling();
  const auto orders = neighbor_orders(*t.map);
  const auto m = map_from_neighbor_orders(t.graph, orders);
  CHECK(neighbor_orders(m) == orders);
  CHECK(sorted_belts(m) == sorted_belts(*t.map));
}

TEST_CASE("mirror keeps belt lengths and genus") {
  const auto g = gamma(2);
  const auto m = mirror(*g.map);
  CHECK(sorted_belts(m) == sorted_belts(*g.map));
  CHECK(euler_genus(m) == 2);
}

TEST_CASE("maps from faces") {
  const Graph q = cube_graph();
  // Cube faces on 3-bit words.
  const std::vector<std::vector<VertexId>> faces{{0, 1, 3, 2}, {4, 6, 7, 5}, {0, 4, 5, 1},
                                                 {2, 3, 7, 6}, {0, 2, 6, 4}, {1, 5, 7, 3}};
  const auto m = map_from_faces(q, faces);
  CHECK(euler_genus(m) == 0);
  CHECK(trace_belts(m).size() == 6);
}

TEST_CASE("disconnected maps have no genus") {
  const auto two = disjoint_union(cube_graph(), cube_graph());
  std::vector<std::vector<VertexId>> orders(16);
  for (VertexId v = 0; v < 16; ++v) orders[v] = {two.neighbors(v).begin(), two.neighbors(v).end()};
  CHECK_THROWS_AS(euler_genus(map_from_neighbor_orders(two, orders)), Error);
}
