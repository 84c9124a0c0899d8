#include "etc/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace etc {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw Error("negative vertex count");
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw Error("edge endpoint out of range");
    if (e.u == e.v) throw Error("not simple: loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end())
    throw Error("not simple: duplicate edge " + std::to_string(it->u) + "-" +
                std::to_string(it->v));
  edges_ = std::move(edges);
  adj_.assign(n, {});
  inc_.assign(n, {});
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> tmp(n);
  for (EdgeId e = 0; e < size(); ++e) {
    tmp[edges_[e].u].push_back({edges_[e].v, e});
    tmp[edges_[e].v].push_back({edges_[e].u, e});
  }
  for (int v = 0; v < n; ++v) {
    std::sort(tmp[v].begin(), tmp[v].end());
    for (auto [w, e] : tmp[v]) {
      adj_[v].push_back(w);
      inc_[v].push_back(e);
    }
  }
}

EdgeId Graph::edge_id(VertexId u, VertexId v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  const auto& a = adj_[u];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it == a.end() || *it != v) return -1;
  return inc_[u][it - a.begin()];
}

bool Graph::is_cubic() const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) != 3) return false;
  return true;
}

CubicGraph::CubicGraph(Graph g) : Graph(std::move(g)) {
  if (order() < 4) throw Error("cubic graph needs at least 4 vertices");
  for (int v = 0; v < order(); ++v)
    if (degree(v) != 3)
      throw Error("not cubic: vertex " + std::to_string(v) + " has degree " +
                  std::to_string(degree(v)));
}

int girth(const Graph& g) {
  const int n = g.order();
  int best = kAcyclic;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::deque<int> q{s};
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      if (2 * dist[x] + 1 >= best) break;
      for (int y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push_back(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  return best;
}

std::vector<std::array<VertexId, 4>> girth_cycles(const Graph& g) {
  if (girth(g) != 4) throw Error("not girth 4");
  std::set<std::array<VertexId, 4>> found;
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int c = a + 1; c < n; ++c) {
      std::vector<int> common;
      std::set_intersection(g.neighbors(a).begin(), g.neighbors(a).end(),
                            g.neighbors(c).begin(), g.neighbors(c).end(),
                            std::back_inserter(common));
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          std::array<VertexId, 4> cyc{a, common[i], c, common[j]};
          auto m = std::min_element(cyc.begin(), cyc.end()) - cyc.begin();
          std::array<VertexId, 4> r{};
          for (int k = 0; k < 4; ++k) r[k] = cyc[(m + k) % 4];
          if (r[1] > r[3]) std::swap(r[1], r[3]);
          found.insert(r);
        }
    }
  }
  return {found.begin(), found.end()};
}

namespace {

// Unit-capacity undirected max flow, stopping once `limit` is reached.
int max_flow(int n, std::span<const Edge> edges, int s, int t, int limit) {
  // Each undirected edge becomes a pair of arcs with capacity 1 each way.
  std::vector<std::vector<int>> out(n);
  std::vector<int> head, cap;
  for (const auto& e : edges) {
    if (e.u == e.v) continue;
    out[e.u].push_back(static_cast<int>(head.size()));
    head.push_back(e.v);
    cap.push_back(1);
    out[e.v].push_back(static_cast<int>(head.size()));
    head.push_back(e.u);
    cap.push_back(1);
  }
  int flow = 0;
  std::vector<int> via(n);
  while (flow < limit) {
    std::fill(via.begin(), via.end(), -1);
    via[s] = -2;
    std::deque<int> q{s};
    while (!q.empty() && via[t] == -1) {
      int x = q.front();
      q.pop_front();
      for (int a : out[x])
        if (cap[a] > 0 && via[head[a]] == -1) {
          via[head[a]] = a;
          q.push_back(head[a]);
        }
    }
    if (via[t] == -1) break;
    for (int x = t; x != s;) {
      int a = via[x];
      cap[a] -= 1;
      cap[a ^ 1] += 1;
      x = head[a ^ 1];
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int edge_connectivity(int n, std::span<const Edge> edges) {
  if (n <= 1) return 0;
  int best = std::numeric_limits<int>::max();
  std::vector<int> deg(n, 0);
  for (const auto& e : edges)
    if (e.u != e.v) ++deg[e.u], ++deg[e.v];
  for (int d : deg) best = std::min(best, d);
  for (int t = 1; t < n && best > 0; ++t) best = std::min(best, max_flow(n, edges, 0, t, best));
  return best;
}

int edge_connectivity(const Graph& g) { return edge_connectivity(g.order(), g.edges()); }

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : g.neighbors(x))
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
  }
  return count == g.order();
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  std::vector<Edge> es;
  es.reserve(g.size());
  for (const auto& e : g.edges()) es.push_back({perm[e.u], perm[e.v]});
  return Graph(g.order(), std::move(es));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es(a.edges());
  for (const auto& e : b.edges()) es.push_back({e.u + a.order(), e.v + a.order()});
  return Graph(a.order() + b.order(), std::move(es));
}

CubicGraph k4_graph() {
  return CubicGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

CubicGraph k33_graph() {
  std::vector<Edge> es;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) es.push_back({a, b});
  return CubicGraph(6, std::move(es));
}

Graph hypercube_graph(int dim) {
  const int n = 1 << dim;
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (!(v >> b & 1)) es.push_back({v, v | (1 << b)});
  return Graph(n, std::move(es));
}

CubicGraph cube_graph() { return CubicGraph(hypercube_graph(3)); }

CubicGraph prism_graph(int k) {
  if (k < 3) throw Error("prism needs k >= 3");
  std::vector<Edge> es;
  for (int i = 0; i < k; ++i) {
    es.push_back({i, (i + 1) % k});
    es.push_back({k + i, k + (i + 1) % k});
    es.push_back({i, k + i});
  }
  return CubicGraph(2 * k, std::move(es));
}

Graph cartesian_with_k2(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    es.push_back(e);
    es.push_back({e.u + n, e.v + n});
  }
  for (int v = 0; v < n; ++v) es.push_back({v, v + n});
  return Graph(2 * n, std::move(es));
}

}  // namespace etc
