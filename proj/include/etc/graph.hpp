#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace etc {

/// Raised for malformed inputs and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with dense vertex ids. Edges are kept sorted
/// (u < v, lexicographic), so an EdgeId is stable for a given edge set.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  /// Neighbors of v, ascending.
  std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
  /// Edge ids incident to v, aligned with neighbors(v).
  std::span<const EdgeId> incident_edges(VertexId v) const { return inc_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

  /// Edge id joining u and v, or -1.
  EdgeId edge_id(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return edge_id(u, v) >= 0; }
  VertexId other(EdgeId e, VertexId v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }
  bool is_cubic() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::vector<EdgeId>> inc_;
};

/// A Graph that is 3-regular with at least four vertices.
class CubicGraph : public Graph {
 public:
  CubicGraph() = default;
  explicit CubicGraph(Graph g);
  CubicGraph(int n, std::vector<Edge> edges) : CubicGraph(Graph(n, std::move(edges))) {}
};

inline constexpr int kAcyclic = std::numeric_limits<int>::max();

/// Length of a shortest cycle, or kAcyclic for forests.
int girth(const Graph& g);

/// Every 4-cycle once, as (a,b,c,d) with a minimal and b < d.
std::vector<std::array<VertexId, 4>> girth_cycles(const Graph& g);

/// Minimum number of edges whose removal disconnects g (0 if disconnected).
int edge_connectivity(const Graph& g);
/// Same for a multigraph given as an edge list; loops are ignored.
int edge_connectivity(int n, std::span<const Edge> edges);

bool is_connected(const Graph& g);

/// Relabels vertices: perm[old] = new.
Graph relabel(const Graph& g, std::span<const int> perm);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

// Small named graphs used as fixtures and oracles.
CubicGraph k4_graph();
CubicGraph k33_graph();
CubicGraph cube_graph();                  // Q3, vertices are 3-bit words
Graph hypercube_graph(int dim);           // Q_dim
CubicGraph prism_graph(int k);            // C_k x K2, rim i -> i, i+k
Graph cartesian_with_k2(const Graph& g);  // g x K2, layer copy at +n

}  // namespace etc
