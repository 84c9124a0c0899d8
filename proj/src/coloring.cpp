#include "etc/coloring.hpp"

#include <set>
#include <string>

namespace etc {

namespace {

void require_complete(const Graph& g, const TotalAssignment& a) {
  if (!a.fits(g)) throw Error("assignment does not match the graph");
  if (!a.complete()) throw Error("incomplete assignment");
  for (Color c : a.vertex)
    if (c < 0 || c >= kColors) throw Error("color out of range");
  for (Color c : a.edge)
    if (c < 0 || c >= kColors) throw Error("color out of range");
}

void require_girth4(const Graph& g) {
  if (girth(g) != 4) throw Error("girth is not 4");
}

bool edges_proper(const Graph& g, const std::vector<Color>& edge) {
  for (VertexId v = 0; v < g.order(); ++v) {
    unsigned seen = 0;
    for (EdgeId e : g.incident_edges(v)) {
      unsigned bit = 1u << edge[e];
      if (seen & bit) return false;
      seen |= bit;
    }
  }
  return true;
}

bool vertices_off_edges(const Graph& g, const TotalAssignment& a) {
  for (VertexId v = 0; v < g.order(); ++v)
    for (EdgeId e : g.incident_edges(v))
      if (a.edge[e] == a.vertex[v]) return false;
  return true;
}

template <class Colors>
bool rainbow(const Colors& cs) {
  unsigned seen = 0;
  for (Color c : cs) seen |= 1u << c;
  return seen == 0xF;
}

}  // namespace

std::vector<ColorClass> color_classes(const TotalAssignment& a) {
  std::vector<ColorClass> out;
  for (Color c = 0; c < kColors; ++c) {
    ColorClass k{c, {}};
    for (VertexId v = 0; v < static_cast<int>(a.vertex.size()); ++v)
      if (a.vertex[v] == c) k.vertices.push_back(v);
    if (!k.vertices.empty()) out.push_back(std::move(k));
  }
  return out;
}

bool is_total_coloring(const Graph& g, const TotalAssignment& a) {
  require_complete(g, a);
  for (const auto& e : g.edges())
    if (a.vertex[e.u] == a.vertex[e.v]) return false;
  return edges_proper(g, a.edge) && vertices_off_edges(g, a);
}

bool is_efficient_dominating_set(const Graph& g, const std::vector<VertexId>& s) {
  std::vector<int> hits(g.order(), 0);
  for (VertexId v : s) {
    if (v < 0 || v >= g.order()) throw Error("vertex out of range");
    ++hits[v];
    for (VertexId w : g.neighbors(v)) ++hits[w];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

bool is_etc(const Graph& g, const TotalAssignment& a) {
  if (!is_total_coloring(g, a)) return false;
  std::vector<std::vector<VertexId>> cls(kColors);
  for (VertexId v = 0; v < g.order(); ++v) cls[a.vertex[v]].push_back(v);
  for (const auto& s : cls)
    if (!is_efficient_dominating_set(g, s)) return false;
  return true;
}

bool is_vegc(const Graph& g, const TotalAssignment& a) {
  require_girth4(g);
  if (!is_total_coloring(g, a)) return false;
  for (const auto& c : girth_cycles(g)) {
    std::array<Color, 4> vs{}, es{};
    for (int i = 0; i < 4; ++i) {
      vs[i] = a.vertex[c[i]];
      es[i] = a.edge[g.edge_id(c[i], c[(i + 1) % 4])];
    }
    if (!rainbow(vs) || !rainbow(es)) return false;
  }
  return true;
}

bool is_etgc(const Graph& g, const TotalAssignment& a) {
  require_girth4(g);
  return is_etc(g, a) && is_vegc(g, a);
}

bool is_egc(const Graph& g, const std::vector<Color>& edge_color) {
  require_girth4(g);
  if (static_cast<int>(edge_color.size()) != g.size()) throw Error("edge coloring does not match the graph");
  for (Color c : edge_color)
    if (c < 0 || c >= kColors) throw Error("color out of range");
  if (!edges_proper(g, edge_color)) return false;
  for (const auto& c : girth_cycles(g)) {
    std::array<Color, 4> es{};
    for (int i = 0; i < 4; ++i) es[i] = edge_color[g.edge_id(c[i], c[(i + 1) % 4])];
    if (!rainbow(es)) return false;
  }
  return true;
}

bool are_orthogonal(const Graph& g, const TotalAssignment& a1, const TotalAssignment& a2) {
  if (!is_etc(g, a1) || !is_etc(g, a2)) throw Error("orthogonality needs two ETCs");
  if (a1.vertex != a2.vertex) return false;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (a1.edge[e] == a2.edge[e]) return false;
  return true;
}

EdgeColoredGraph prism_egc(const Graph& g, const TotalAssignment& a1, const TotalAssignment& a2) {
  if (!are_orthogonal(g, a1, a2)) throw Error("prism coloring needs orthogonal ETCs");
  const int n = g.order();
  EdgeColoredGraph out{cartesian_with_k2(g), {}};
  out.edge.assign(out.graph.size(), kUnset);
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto& [u, v] = g.edge(e);
    out.edge[out.graph.edge_id(u, v)] = a1.edge[e];
    out.edge[out.graph.edge_id(u + n, v + n)] = a2.edge[e];
  }
  for (VertexId v = 0; v < n; ++v) out.edge[out.graph.edge_id(v, v + n)] = a1.vertex[v];
  return out;
}

bool is_stc(const Graph& g, const TotalAssignment& a) {
  if (!a.fits(g) || !a.complete()) return false;
  return edges_proper(g, a.edge) && vertices_off_edges(g, a);
}

std::vector<EdgeId> beta_edges(const Graph& g, const TotalAssignment& a) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (a.vertex[g.edge(e).u] == a.vertex[g.edge(e).v]) out.push_back(e);
  return out;
}

bool is_total_perfect_code(const Graph& g, const std::vector<VertexId>& s) {
  std::vector<char> in(g.order(), 0);
  for (VertexId v : s) in.at(v) = 1;
  for (VertexId v = 0; v < g.order(); ++v) {
    int count = 0;
    for (VertexId w : g.neighbors(v)) count += in[w];
    if (count != 1) return false;
  }
  return g.order() > 0;
}

TpcPartition tpc_partition(const Graph& g, const TotalAssignment& a) {
  TpcPartition r;
  r.classes = color_classes(a);
  if (r.classes.size() != 2) return r;
  // Each class must induce a perfect matching: every member has exactly one
  // neighbor of its own color. A literal 2-partition into total perfect codes
  // is impossible in a cubic graph, so membership is tested within the class.
  for (const auto& k : r.classes) {
    std::vector<char> in(g.order(), 0);
    for (VertexId v : k.vertices) in[v] = 1;
    for (VertexId v : k.vertices) {
      int count = 0;
      for (VertexId w : g.neighbors(v)) count += in[w];
      if (count != 1) return r;
    }
  }
  r.perfect = true;
  return r;
}

namespace {

Color partner(Color c, Color c0, Color c1) { return c == c0 ? c1 : c0; }

// Incident edges of v colored c0 or c1.
std::vector<EdgeId> pair_edges(const Graph& g, const TotalAssignment& a, VertexId v, Color c0, Color c1) {
  std::vector<EdgeId> out;
  for (EdgeId e : g.incident_edges(v))
    if (a.edge[e] == c0 || a.edge[e] == c1) out.push_back(e);
  return out;
}

bool end_ok(const Graph& g, const TotalAssignment& a, VertexId v, EdgeId e, Color c0, Color c1) {
  return pair_edges(g, a, v, c0, c1).size() == 1 && a.vertex[v] == partner(a.edge[e], c0, c1);
}

}  // namespace

std::vector<AlternatingPath> find_maximal_alternating_paths(const Graph& g, const TotalAssignment& a,
                                                            Color c0, Color c1) {
  if (c0 == c1) throw Error("alternating path needs two distinct colors");
  if (!is_stc(g, a)) throw Error("alternating paths need a semi-total coloring");
  std::vector<AlternatingPath> out;
  std::vector<char> used(g.size(), 0);
  for (VertexId s = 0; s < g.order(); ++s) {
    auto start = pair_edges(g, a, s, c0, c1);
    if (start.size() != 1 || used[start[0]]) continue;
    AlternatingPath p{{s}, {}, c0, c1, true};
    VertexId v = s;
    EdgeId e = start[0];
    for (;;) {
      used[e] = 1;
      p.edges.push_back(e);
      v = g.other(e, v);
      p.vertices.push_back(v);
      EdgeId next = -1;
      for (EdgeId f : pair_edges(g, a, v, c0, c1))
        if (f != e) next = f;
      if (next < 0) break;
      e = next;
    }
    const VertexId t = p.vertices.back();
    if (!end_ok(g, a, s, p.edges.front(), c0, c1) || !end_ok(g, a, t, p.edges.back(), c0, c1)) continue;
    bool forward = a.vertex[s] == c0 && a.edge[p.edges.front()] == c1;
    bool backward = a.vertex[t] == c0 && a.edge[p.edges.back()] == c1;
    if (!forward && !backward) continue;
    if (!forward || (backward && t < s)) {
      std::reverse(p.vertices.begin(), p.vertices.end());
      std::reverse(p.edges.begin(), p.edges.end());
    }
    out.push_back(std::move(p));
  }
  return out;
}

TotalAssignment beta_reduce(const Graph& g, const TotalAssignment& a, const AlternatingPath& p) {
  if (!is_stc(g, a)) throw Error("beta reduction needs a semi-total coloring");
  // A path already reduced carries the roles swapped; reducing it again restores a.
  const bool swapped = !p.vertices.empty() && a.vertex[p.vertices.front()] == p.c1;
  const Color c0 = swapped ? p.c1 : p.c0, c1 = swapped ? p.c0 : p.c1;
  const int k = static_cast<int>(p.edges.size());
  auto fail = [](const std::string& why) { throw Error("not a maximal alternating path: " + why); };
  if (c0 == c1) fail("colors coincide");
  if (k < 1 || static_cast<int>(p.vertices.size()) != k + 1) fail("malformed sequence");
  std::set<VertexId> distinct(p.vertices.begin(), p.vertices.end());
  if (static_cast<int>(distinct.size()) != k + 1) fail("repeated vertex");
  for (int j = 0; j < k; ++j) {
    EdgeId e = p.edges[j];
    if (e < 0 || e >= g.size() || g.edge_id(p.vertices[j], p.vertices[j + 1]) != e) fail("edge off the path");
    if (a.edge[e] != ((j % 2 == 0) ? c1 : c0)) fail("colors do not alternate");
  }
  if (a.vertex[p.vertices.front()] != c0) fail("first vertex must carry c0");
  if (!end_ok(g, a, p.vertices.front(), p.edges.front(), c0, c1) ||
      !end_ok(g, a, p.vertices.back(), p.edges.back(), c0, c1))
    fail("end condition");
  TotalAssignment r = a;
  r.vertex[p.vertices.front()] = partner(a.vertex[p.vertices.front()], c0, c1);
  r.vertex[p.vertices.back()] = partner(a.vertex[p.vertices.back()], c0, c1);
  for (EdgeId e : p.edges) r.edge[e] = partner(a.edge[e], c0, c1);
  return r;
}

}  // namespace etc
