#include <algorithm>
#include <set>

#include "doctest.h"
#include "etc/canonical.hpp"
#include "etc/families.hpp"
#include "oracle.hpp"

using namespace etc;

namespace {

// Every 2-subset of Q3 that is an EDS, found by brute force.
std::vector<std::pair<int, int>> eds_pairs_of_cube() {
  const Graph q = cube_graph();
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) {
      bool ok = !q.adjacent(a, b);
      for (int v = 0; v < 8 && ok; ++v) {
        int hits = (v == a) + (v == b) + q.adjacent(v, a) + q.adjacent(v, b);
        ok = hits == 1;
      }
      if (ok) out.emplace_back(a, b);
    }
  return out;
}

TotalAssignment with_vertex(TotalAssignment a, VertexId v, Color c) {
  a.vertex[v] = c;
  return a;
}

bool element_differs(const TotalAssignment& a, const TotalAssignment& b, const AlternatingPath& p) {
  std::set<VertexId> pv{p.vertices.front(), p.vertices.back()};
  std::set<EdgeId> pe(p.edges.begin(), p.edges.end());
  for (VertexId v = 0; v < static_cast<int>(a.vertex.size()); ++v)
    if ((a.vertex[v] != b.vertex[v]) != static_cast<bool>(pv.count(v))) return false;
  for (EdgeId e = 0; e < static_cast<int>(a.edge.size()); ++e)
    if ((a.edge[e] != b.edge[e]) != static_cast<bool>(pe.count(e))) return false;
  return true;
}

}  // namespace

TEST_CASE("total coloring validator") {
  const auto q = q3();
  CHECK(is_total_coloring(q.graph, q.assignment));
  const auto [u, v] = q.graph.edge(0);
  auto clash = q.assignment;
  clash.vertex[v] = clash.vertex[u];
  CHECK_FALSE(is_total_coloring(q.graph, clash));
  auto gap = q.assignment;
  gap.edge[3] = kUnset;
  CHECK_THROWS_AS(is_total_coloring(q.graph, gap), Error);
}

TEST_CASE("efficient dominating sets in small graphs") {
  const auto pairs = eds_pairs_of_cube();
  CHECK(pairs.size() == 4);
  for (auto [a, b] : pairs) {
    CHECK((a ^ b) == 7);  // antipodal on 3-bit words
    CHECK(is_efficient_dominating_set(cube_graph(), {a, b}));
  }
  CHECK_FALSE(is_efficient_dominating_set(cube_graph(), {}));
  for (int v = 0; v < 6; ++v) CHECK_FALSE(is_efficient_dominating_set(k33_graph(), {v}));
}

TEST_CASE("ETC validator on the reference colorings") {
  const auto q = q3();
  CHECK(is_etc(q.graph, q.assignment));
  CHECK(is_etc(q.graph, *q.partner));
  const auto p = prism(2);
  CHECK(isomorphic(p.graph, prism_graph(8)));
  CHECK(is_etc(p.graph, p.assignment));
  REQUIRE(p.partner);
  CHECK(is_etc(p.graph, *p.partner));
  CHECK_FALSE(is_etc(q.graph, with_vertex(q.assignment, 0, (q.assignment.vertex[0] + 1) % 4)));
}

TEST_CASE("ETC classes partition the vertices into quarters") {
  for (const auto& inst : {q3(), prism(3), truncated_square_tiling(), gamma(1)}) {
    REQUIRE(is_etc(inst.graph, inst.assignment));
    const auto classes = color_classes(inst.assignment);
    CHECK(classes.size() == 4);
    for (const auto& c : classes) {
      CHECK(static_cast<int>(c.vertices.size()) * 4 == inst.graph.order());
      CHECK(is_efficient_dominating_set(inst.graph, c.vertices));
      for (VertexId v : c.vertices) CHECK(inst.assignment.vertex[v] == c.color);
    }
  }
}

TEST_CASE("VEGC and ETGC validators") {
  const auto q = q3();
  CHECK(is_vegc(q.graph, q.assignment));
  CHECK(is_etgc(q.graph, q.assignment));
  CHECK(is_etgc(gamma(1).graph, gamma(1).assignment));
  // Every total 4-coloring of Q3 is an ETGC; the hexagonal prism has total
  // colorings that repeat a color around some 4-cycle.
  const Graph c6 = prism_graph(6);
  int rejected = 0;
  for (const auto& a : etc::testing::naive_total_colorings(c6, 192)) {
    REQUIRE(is_total_coloring(c6, a));
    CHECK(is_etgc(c6, a) == (is_etc(c6, a) && is_vegc(c6, a)));
    rejected += !is_vegc(c6, a);
  }
  CHECK(rejected > 0);
  CHECK_THROWS_AS(is_vegc(k4_graph(), TotalAssignment(k4_graph())), Error);
}

TEST_CASE("EGC validator") {
  const auto q = q3();
  const auto p = prism_egc(q.graph, q.assignment, *q.partner);
  CHECK(is_egc(p.graph, p.edge));
  CHECK(isomorphic(p.graph, hypercube_graph(4)));
  std::vector<Color> mono(q.graph.size(), 0);
  CHECK_FALSE(is_egc(q.graph, mono));
  CHECK_THROWS_AS(is_egc(k4_graph(), std::vector<Color>(6, 0)), Error);
  const auto c8 = prism(2);
  const auto p8 = prism_egc(c8.graph, c8.assignment, *c8.partner);
  CHECK(is_egc(p8.graph, p8.edge));
  CHECK(isomorphic(p8.graph, cartesian_with_k2(prism_graph(8))));
}

TEST_CASE("orthogonality") {
  const auto q = q3();
  CHECK(are_orthogonal(q.graph, q.assignment, *q.partner));
  CHECK(are_orthogonal(q.graph, *q.partner, q.assignment));
  CHECK_FALSE(are_orthogonal(q.graph, q.assignment, q.assignment));
  const auto shifted = permute_colors(*q.partner, {1, 2, 3, 0});
  CHECK_FALSE(are_orthogonal(q.graph, q.assignment, shifted));
  CHECK_THROWS_AS(prism_egc(q.graph, q.assignment, q.assignment), Error);
  CHECK_THROWS_AS(are_orthogonal(q.graph, q.assignment, with_vertex(q.assignment, 0, q.assignment.vertex[1])), Error);
}

TEST_CASE("semi-total colorings and beta edges") {
  const auto q = q3();
  CHECK(is_stc(q.graph, q.assignment));
  CHECK(beta_edges(q.graph, q.assignment).empty());
  auto bad = q.assignment;
  bad.vertex[q.graph.edge(0).u] = bad.edge[0];
  CHECK_FALSE(is_stc(q.graph, bad));
  for (int g : {0, 1}) {
    const auto inst = g_odd(g);
    CHECK(is_stc(inst.graph, inst.assignment));
    const auto beta = beta_edges(inst.graph, inst.assignment);
    std::vector<int> cover(inst.graph.order(), 0);
    for (EdgeId e : beta) {
      ++cover[inst.graph.edge(e).u];
      ++cover[inst.graph.edge(e).v];
    }
    CHECK(inst.graph.order() == 16 * g + 16);
    CHECK(std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; }));
  }
}

TEST_CASE("total perfect codes") {
  const auto g1 = g_odd(0);
  std::vector<VertexId> red;
  for (VertexId v = 0; v < g1.graph.order(); ++v)
    if (g1.assignment.vertex[v] == 1) red.push_back(v);
  // A cubic graph cannot split into two total perfect codes (|S| = |V|/3
  // each), so the classes of a perfect STC each induce a perfect matching.
  CHECK_FALSE(is_total_perfect_code(g1.graph, red));
  for (VertexId v : red) {
    int inside = 0;
    for (VertexId w : g1.graph.neighbors(v)) inside += g1.assignment.vertex[w] == 1;
    CHECK(inside == 1);
  }
  int k33_codes = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) k33_codes += is_total_perfect_code(k33_graph(), {a, b});
  CHECK(k33_codes == 9);
  for (auto [a, b] : eds_pairs_of_cube()) CHECK_FALSE(is_total_perfect_code(cube_graph(), {a, b}));
  CHECK_FALSE(is_total_perfect_code(cube_graph(), {}));
}

TEST_CASE("TPC partitions") {
  for (int g = 0; g <= 3; ++g) {
    const auto inst = g_odd(g);
    const auto part = tpc_partition(inst.graph, inst.assignment);
    CHECK(part.perfect);
    REQUIRE(part.classes.size() == 2);
    CHECK(part.classes[0].color == 1);
    CHECK(part.classes[1].color == 3);
  }
  const auto q = q3();
  CHECK_FALSE(tpc_partition(q.graph, q.assignment).perfect);
}

TEST_CASE("maximal alternating paths of the smallest odd member") {
  const auto g1 = g_odd(0);
  const auto paths = find_maximal_alternating_paths(g1.graph, g1.assignment, 3, 0);
  // The listed color string 3 -0- 1 -3- 1 -0- 3 from u_0 through w_2.
  const std::vector<VertexId> listed{g1.at("u_0"), g1.at("u_1"), g1.at("w_1"), g1.at("w_2")};
  bool found = false;
  for (const auto& p : paths) {
    CHECK(p.maximal);
    if (p.vertices == listed || std::vector<VertexId>(p.vertices.rbegin(), p.vertices.rend()) == listed) {
      found = true;
      std::vector<Color> vc, ec;
      for (VertexId v : p.vertices) vc.push_back(g1.assignment.vertex[v]);
      for (EdgeId e : p.edges) ec.push_back(g1.assignment.edge[e]);
      CHECK(vc == std::vector<Color>{3, 1, 1, 3});
      CHECK(ec == std::vector<Color>{0, 3, 0});
    }
  }
  CHECK(found);
  CHECK_THROWS_AS(find_maximal_alternating_paths(g1.graph, g1.assignment, 2, 2), Error);
}

TEST_CASE("beta reduction") {
  for (int g = 0; g <= 3; ++g) {
    const auto inst = g_odd(g);
    const auto schedule = g_odd_reduction_schedule(inst);
    TotalAssignment a = inst.assignment;
    for (const auto& p : schedule) {
      const auto next = beta_reduce(inst.graph, a, p);
      CHECK(is_stc(inst.graph, next));
      CHECK(element_differs(a, next, p));
      CHECK(beta_reduce(inst.graph, next, [&] {
              // The swapped path is maximal again with its colors exchanged.
              AlternatingPath back = p;
              std::swap(back.c0, back.c1);
              return back;
            }()) == a);
      a = next;
    }
    CHECK(is_total_coloring(inst.graph, a));
    CHECK(beta_edges(inst.graph, a).empty());
    CHECK(a == apply_schedule(inst.graph, inst.assignment, schedule));
  }
}

TEST_CASE("beta reduction rejects paths that are not maximal") {
  const auto g1 = g_odd(0);
  auto p = g_odd_reduction_schedule(g1).front();
  p.vertices.pop_back();
  p.edges.pop_back();
  CHECK_THROWS_AS(beta_reduce(g1.graph, g1.assignment, p), Error);
}
