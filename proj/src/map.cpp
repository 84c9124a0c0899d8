#include "etc/map.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace etc {

CombinatorialMap::CombinatorialMap(Graph g, RotationSystem rotation)
    : graph_(std::move(g)), rotation_(std::move(rotation)) {
  const int n = graph_.order();
  if (static_cast<int>(rotation_.order.size()) != n) throw Error("rotation size mismatch");
  succ_.assign(2 * graph_.size(), -1);
  for (int v = 0; v < n; ++v) {
    const auto& cyc = rotation_.order[v];
    if (static_cast<int>(cyc.size()) != graph_.degree(v))
      throw Error("malformed rotation at vertex " + std::to_string(v));
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Dart d = cyc[i];
      if (d < 0 || d >= 2 * graph_.size() || tail(d) != v || succ_[d] != -1)
        throw Error("malformed rotation at vertex " + std::to_string(v));
      succ_[d] = cyc[(i + 1) % cyc.size()];
    }
  }
}

Dart CombinatorialMap::dart(VertexId from, VertexId to) const {
  EdgeId e = graph_.edge_id(from, to);
  if (e < 0) throw Error("no edge " + std::to_string(from) + "-" + std::to_string(to));
  return graph_.edge(e).u == from ? 2 * e : 2 * e + 1;
}

std::vector<Belt> trace_belts(const CombinatorialMap& m) {
  const int darts = 2 * m.graph().size();
  std::vector<char> used(darts, 0);
  std::vector<Belt> belts;
  for (Dart start = 0; start < darts; ++start) {
    if (used[start]) continue;
    Belt b;
    Dart d = start;
    do {
      if (used[d]) throw Error("face tracing revisited a dart");
      used[d] = 1;
      b.vertices.push_back(m.tail(d));
      b.edges.push_back(edge_of(d));
      b.darts.push_back(d);
      d = m.face_next(d);
    } while (d != start);
    belts.push_back(std::move(b));
  }
  return belts;
}

int euler_genus(const CombinatorialMap& m) {
  if (!is_connected(m.graph())) throw Error("euler_genus needs a connected map");
  const int chi = m.graph().order() - m.graph().size() + static_cast<int>(trace_belts(m).size());
  if ((2 - chi) % 2 != 0 || chi > 2) throw Error("inconsistent Euler characteristic");
  return (2 - chi) / 2;
}

std::vector<int> belt_lengths(const CombinatorialMap& m) {
  std::vector<int> out;
  for (const auto& b : trace_belts(m)) out.push_back(b.length());
  std::sort(out.begin(), out.end());
  return out;
}

CombinatorialMap mirror(const CombinatorialMap& m) {
  RotationSystem r = m.rotation();
  for (auto& cyc : r.order) std::reverse(cyc.begin(), cyc.end());
  return CombinatorialMap(m.graph(), std::move(r));
}

CombinatorialMap map_from_faces(const Graph& g, const std::vector<std::vector<VertexId>>& faces) {
  const int nf = static_cast<int>(faces.size());
  // Which faces use each edge, and in which direction (+1: u->v).
  std::vector<std::vector<std::pair<int, int>>> users(g.size());
  for (int f = 0; f < nf; ++f) {
    const auto& cyc = faces[f];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      VertexId a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      EdgeId e = g.edge_id(a, b);
      if (e < 0)
        throw Error("face " + std::to_string(f) + " uses missing edge " + std::to_string(a) +
                    "-" + std::to_string(b));
      users[e].push_back({f, g.edge(e).u == a ? 1 : -1});
    }
  }
  std::vector<int> orient(nf, 0);
  for (int root = 0; root < nf; ++root) {
    if (orient[root]) continue;
    orient[root] = 1;
    std::deque<int> q{root};
    while (!q.empty()) {
      int f = q.front();
      q.pop_front();
      const auto& cyc = faces[f];
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        EdgeId e = g.edge_id(cyc[i], cyc[(i + 1) % cyc.size()]);
        int dir_f = 0;
        for (auto [h, d] : users[e])
          if (h == f) dir_f = d;
        for (auto [h, d] : users[e]) {
          if (h == f) continue;
          int want = -dir_f * orient[f] * d;  // orientation making h traverse e oppositely
          if (orient[h] == 0) {
            orient[h] = want;
            q.push_back(h);
          } else if (orient[h] != want) {
            throw Error("faces cannot be oriented consistently");
          }
        }
      }
    }
  }
  // Corner (a -> v -> b) of an oriented face means the rotation at v sends
  // dart v->a to dart v->b.
  const int n = g.order();
  std::vector<std::map<VertexId, VertexId>> next(n);
  for (int f = 0; f < nf; ++f) {
    std::vector<VertexId> cyc = faces[f];
    if (orient[f] < 0) std::reverse(cyc.begin(), cyc.end());
    const std::size_t k = cyc.size();
    for (std::size_t i = 0; i < k; ++i) {
      VertexId a = cyc[i], v = cyc[(i + 1) % k], b = cyc[(i + 2) % k];
      auto [it, fresh] = next[v].emplace(a, b);
      if (!fresh && it->second != b)
        throw Error("conflicting corners at vertex " + std::to_string(v));
    }
  }
  RotationSystem rot;
  rot.order.resize(n);
  for (int v = 0; v < n; ++v) {
    auto nbrs = g.neighbors(v);
    auto& nx = next[v];
    if (g.degree(v) == 3 && !nx.empty()) {
      auto [a, b] = *nx.begin();
      VertexId c = -1;
      for (VertexId w : nbrs)
        if (w != a && w != b) c = w;
      nx.emplace(b, c);
      nx.emplace(c, a);
    }
    if (static_cast<int>(nx.size()) != g.degree(v))
      throw Error("faces do not determine the rotation at vertex " + std::to_string(v));
    VertexId w = nbrs[0];
    for (int i = 0; i < g.degree(v); ++i) {
      EdgeId e = g.edge_id(v, w);
      rot.order[v].push_back(g.edge(e).u == v ? 2 * e : 2 * e + 1);
      w = nx.at(w);
    }
    if (w != nbrs[0]) throw Error("rotation at vertex " + std::to_string(v) + " is not one cycle");
  }
  return CombinatorialMap(g, std::move(rot));
}

CombinatorialMap map_from_neighbor_orders(Graph g, const std::vector<std::vector<VertexId>>& orders) {
  if (static_cast<int>(orders.size()) != g.order()) throw Error("rotation size mismatch");
  RotationSystem rot;
  rot.order.resize(g.order());
  for (VertexId v = 0; v < g.order(); ++v)
    for (VertexId w : orders[v]) {
      EdgeId e = g.edge_id(v, w);
      if (e < 0) throw Error("malformed rotation at vertex " + std::to_string(v));
      rot.order[v].push_back(g.edge(e).u == v ? 2 * e : 2 * e + 1);
    }
  return CombinatorialMap(std::move(g), std::move(rot));
}

std::vector<std::vector<VertexId>> neighbor_orders(const CombinatorialMap& m) {
  std::vector<std::vector<VertexId>> out(m.graph().order());
  for (VertexId v = 0; v < m.graph().order(); ++v)
    for (Dart d : m.rotation().order[v]) out[v].push_back(m.head(d));
  return out;
}

}  // namespace etc
