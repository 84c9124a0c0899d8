#include "etc/operations.hpp"

#include <set>
#include <string>

#include "etc/coloring.hpp"

namespace etc {

namespace {

// Orientation of the 4-face through (a, b, c, d): +1 when a->b is followed by
// b->c in the face permutation, -1 for the reverse walk, 0 if not a face.
int face_orientation(const CombinatorialMap& m, const std::array<VertexId, 4>& q) {
  const Graph& g = m.graph();
  for (int i = 0; i < 4; ++i)
    if (!g.adjacent(q[i], q[(i + 1) % 4])) return 0;
  auto walks = [&](std::array<VertexId, 4> w) {
    Dart d = m.dart(w[0], w[1]);
    for (int i = 1; i <= 4; ++i) {
      d = m.face_next(d);
      if (m.tail(d) != w[i % 4] || m.head(d) != w[(i + 1) % 4]) return false;
    }
    return true;
  };
  if (walks(q)) return 1;
  if (walks({q[1], q[0], q[3], q[2]})) return -1;
  return 0;
}

void replace_neighbor(std::vector<VertexId>& order, VertexId from, VertexId to) {
  for (auto& w : order)
    if (w == from) {
      w = to;
      return;
    }
  throw Error("rotation lacks neighbor " + std::to_string(from));
}

}  // namespace

UnfoldResult unfold(const CombinatorialMap& m, const std::array<VertexId, 4>& belt, int ell) {
  if (ell < 2) throw Error("unfolding needs l >= 2");
  const int orient = face_orientation(m, belt);
  if (orient == 0) throw Error("belt is not a 4-face of the map");
  // Work in the orientation where the face walk is a -> b -> c -> d.
  const auto [a, b, c, d] =
      orient > 0 ? belt : std::array<VertexId, 4>{belt[1], belt[0], belt[3], belt[2]};
  const Graph& g = m.graph();
  const int n = g.order(), inner = 2 * ell - 2;
  auto r = [&](int i) { return i == 0 ? a : i == inner + 1 ? d : n + i - 1; };
  auto s = [&](int i) { return i == 0 ? b : i == inner + 1 ? c : n + inner + i - 1; };

  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    auto is = [&](VertexId x, VertexId y) { return (e.u == x && e.v == y) || (e.u == y && e.v == x); };
    if (!is(b, c) && !is(d, a)) edges.push_back(e);
  }
  for (int i = 0; i <= inner; ++i) {
    edges.push_back({r(i), r(i + 1)});
    edges.push_back({s(i), s(i + 1)});
  }
  for (int i = 1; i <= inner; ++i) edges.push_back({r(i), s(i)});

  auto orders = neighbor_orders(m);
  orders.resize(n + 2 * inner);
  replace_neighbor(orders[a], d, r(1));
  replace_neighbor(orders[d], a, r(inner));
  replace_neighbor(orders[b], c, s(1));
  replace_neighbor(orders[c], b, s(inner));
  for (int i = 1; i <= inner; ++i) {
    orders[r(i)] = {s(i), r(i - 1), r(i + 1)};
    orders[s(i)] = {s(i - 1), r(i), s(i + 1)};
  }
  UnfoldResult out{map_from_neighbor_orders(Graph(n + 2 * inner, std::move(edges)), orders), {}, {}};
  for (int i = 0; i <= inner + 1; ++i) {
    out.rail_a.push_back(r(i));
    out.rail_b.push_back(s(i));
  }
  if (orient < 0) std::swap(out.rail_a, out.rail_b);
  return out;
}

UnfoldPatch ladder_patch(int ell) {
  if (ell < 2) throw Error("unfolding needs l >= 2");
  const int len = 2 * ell;
  std::vector<Edge> es;
  for (int i = 0; i + 1 < len; ++i) {
    es.push_back({i, i + 1});
    es.push_back({len + i, len + i + 1});
  }
  for (int i = 0; i < len; ++i) es.push_back({i, len + i});
  return {Graph(2 * len, std::move(es)), {0, len, 2 * len - 1, len - 1}};
}

Graph unfold_graph(const Graph& g, const std::array<VertexId, 4>& cycle, const UnfoldPatch& patch) {
  const auto [a, b, c, d] = cycle;
  for (int i = 0; i < 4; ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % 4])) throw Error("unfold site is not a 4-cycle");
  const Graph& p = patch.graph;
  const auto [pa, pb, pc, pd] = patch.corners;
  if (!p.adjacent(pa, pb) || !p.adjacent(pc, pd)) throw Error("patch lacks its shared edges");
  std::set<VertexId> corners(patch.corners.begin(), patch.corners.end());
  if (corners.size() != 4) throw Error("patch corners must be distinct");
  for (VertexId v = 0; v < p.order(); ++v)
    if (p.degree(v) != (corners.count(v) ? 2 : 3)) throw Error("patch degree contract violated");

  std::vector<VertexId> id(p.order(), -1);
  id[pa] = a, id[pb] = b, id[pc] = c, id[pd] = d;
  int next = g.order();
  for (VertexId v = 0; v < p.order(); ++v)
    if (id[v] < 0) id[v] = next++;
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    auto is = [&](VertexId x, VertexId y) { return (e.u == x && e.v == y) || (e.u == y && e.v == x); };
    if (!is(b, c) && !is(d, a)) es.push_back(e);
  }
  for (const auto& e : p.edges()) {
    auto is = [&](VertexId x, VertexId y) { return (e.u == x && e.v == y) || (e.u == y && e.v == x); };
    if (!is(pa, pb) && !is(pc, pd)) es.push_back({id[e.u], id[e.v]});
  }
  Graph out(next, std::move(es));
  if (!out.is_cubic()) throw Error("unfold result is not cubic");
  if (girth(out) != 4) throw Error("unfold result does not have girth 4");
  return out;
}

namespace {

Graph swapped_graph(const Graph& g, const ExchangeSite& site) {
  const auto [v0, v1, v2, v3] = site.cycle;
  std::set<VertexId> distinct(site.cycle.begin(), site.cycle.end());
  if (distinct.size() != 4) throw Error("exchange site vertices must be distinct");
  for (VertexId v : site.cycle)
    if (v < 0 || v >= g.order()) throw Error("exchange site vertex out of range");
  if (!g.adjacent(v0, v1) || !g.adjacent(v2, v3)) throw Error("exchange site lacks its present pair");
  if (g.adjacent(v1, v2) || g.adjacent(v3, v0)) throw Error("exchange would create a multi-edge");
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    auto is = [&](VertexId x, VertexId y) { return (e.u == x && e.v == y) || (e.u == y && e.v == x); };
    if (!is(v0, v1) && !is(v2, v3)) es.push_back(e);
  }
  es.push_back({v1, v2});
  es.push_back({v3, v0});
  return Graph(g.order(), std::move(es));
}

}  // namespace

ExchangeResult exchange(const Graph& g, const TotalAssignment& a, const ExchangeSite& site) {
  if (!a.fits(g)) throw Error("assignment does not match the graph");
  const auto [v0, v1, v2, v3] = site.cycle;
  Graph h = swapped_graph(g, site);
  const Color c = a.edge[g.edge_id(v0, v1)];
  const bool ok = a.vertex[v0] != kUnset && a.vertex[v1] != kUnset && c != kUnset &&
                  a.vertex[v0] == a.vertex[v2] && a.vertex[v1] == a.vertex[v3] &&
                  a.vertex[v0] != a.vertex[v1] && a.edge[g.edge_id(v2, v3)] == c &&
                  c != a.vertex[v0] && c != a.vertex[v1];
  if (!ok) throw Error("exchange color precondition violated");
  ExchangeResult r{h, TotalAssignment(h), false, false};
  r.assignment.vertex = a.vertex;
  for (EdgeId e = 0; e < h.size(); ++e) {
    const auto& [x, y] = h.edge(e);
    EdgeId old = g.edge_id(x, y);
    r.assignment.edge[e] = old >= 0 ? a.edge[old] : c;
  }
  r.girth4 = girth(h) == 4;
  r.etgc = r.girth4 && r.assignment.complete() && is_etgc(h, r.assignment);
  return r;
}

CombinatorialMap exchange_map(const CombinatorialMap& m, const ExchangeSite& site,
                              const std::array<std::vector<VertexId>, 4>& site_orders) {
  Graph h = swapped_graph(m.graph(), site);
  auto orders = neighbor_orders(m);
  for (int i = 0; i < 4; ++i) orders[site.cycle[i]] = site_orders[i];
  return map_from_neighbor_orders(std::move(h), orders);
}

AmalgamResult self_amalgam(const Graph& g, const std::vector<VertexId>& c1, const std::vector<VertexId>& c2) {
  if (c1.size() != c2.size()) throw Error("amalgam cycles have different lengths");
  const int k = static_cast<int>(c1.size());
  if (k < 3) throw Error("amalgam needs cycles");
  std::vector<char> on(g.order(), 0);
  for (const auto* cyc : {&c1, &c2})
    for (int i = 0; i < k; ++i) {
      VertexId v = (*cyc)[i];
      if (v < 0 || v >= g.order() || on[v]) throw Error("amalgam cycles must be vertex-disjoint simple cycles");
      on[v] = 1;
      if (!g.adjacent(v, (*cyc)[(i + 1) % k])) throw Error("matching is not a cycle isomorphism");
    }
  auto outside = [&](VertexId v) {
    VertexId w = -1;
    int count = 0;
    for (VertexId x : g.neighbors(v))
      if (!on[x]) w = x, ++count;
    if (count != 1) throw Error("amalgam cycle vertex needs exactly one neighbor off the cycles");
    return w;
  };
  std::vector<VertexId> id(g.order(), -1);
  int n = 0;
  for (VertexId v = 0; v < g.order(); ++v)
    if (!on[v]) id[v] = n++;
  std::vector<Edge> es;
  for (const auto& e : g.edges())
    if (!on[e.u] && !on[e.v]) es.push_back({id[e.u], id[e.v]});
  for (int i = 0; i < k; ++i) {
    VertexId x = outside(c1[i]), y = outside(c2[i]);
    if (x == y) throw Error("amalgam creates a loop");
    es.push_back({id[x], id[y]});
  }
  Graph out(n, std::move(es));
  if (!out.is_cubic()) throw Error("amalgam result is not cubic");
  return {std::move(out), id, {}};
}

AmalgamResult amalgam(const Graph& g1, const std::vector<VertexId>& c1, const Graph& g2,
                      const std::vector<VertexId>& c2) {
  const int n1 = g1.order();
  std::vector<VertexId> shifted;
  for (VertexId v : c2) shifted.push_back(v + n1);
  auto r = self_amalgam(disjoint_union(g1, g2), c1, shifted);
  AmalgamResult out{std::move(r.graph), {}, {}};
  out.from_first.assign(r.from_first.begin(), r.from_first.begin() + n1);
  out.from_second.assign(r.from_first.begin() + n1, r.from_first.end());
  return out;
}

}  // namespace etc
