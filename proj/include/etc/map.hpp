#pragma once

#include <span>
#include <vector>

#include "etc/graph.hpp"

namespace etc {

/// Dart 2e runs edge(e).u -> edge(e).v, dart 2e+1 the reverse.
using Dart = int;
inline constexpr Dart reverse(Dart d) { return d ^ 1; }
inline constexpr EdgeId edge_of(Dart d) { return d >> 1; }

/// Cyclic order of outgoing darts at every vertex.
struct RotationSystem {
  std::vector<std::vector<Dart>> order;
};

/// Closed face-boundary walk. edges[i] joins vertices[i] and vertices[i+1]
/// (cyclically).
struct Belt {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  std::vector<Dart> darts;
  int length() const { return static_cast<int>(edges.size()); }
};

class CombinatorialMap {
 public:
  CombinatorialMap() = default;
  /// Throws if a vertex's cycle does not list exactly its incident darts.
  CombinatorialMap(Graph g, RotationSystem rotation);

  const Graph& graph() const { return graph_; }
  const RotationSystem& rotation() const { return rotation_; }

  VertexId tail(Dart d) const {
    const auto& e = graph_.edge(edge_of(d));
    return (d & 1) ? e.v : e.u;
  }
  VertexId head(Dart d) const { return tail(reverse(d)); }
  Dart dart(VertexId from, VertexId to) const;
  /// Next outgoing dart at tail(d) in the rotation.
  Dart successor(Dart d) const { return succ_[d]; }
  /// Face permutation: rotation successor of the reversed dart.
  Dart face_next(Dart d) const { return succ_[reverse(d)]; }

 private:
  Graph graph_;
  RotationSystem rotation_;
  std::vector<Dart> succ_;
};

std::vector<Belt> trace_belts(const CombinatorialMap& m);

/// Orientable genus of the embedding carried by m: (2 - V + E - F) / 2.
int euler_genus(const CombinatorialMap& m);

/// Builds a rotation from a set of face boundaries given as vertex cycles.
/// Faces are oriented consistently (shared edges run in opposite directions)
/// starting from the orientation of faces[0]. Every vertex needs at least one
/// corner; degree-3 vertices are completed from a single corner.
CombinatorialMap map_from_faces(const Graph& g, const std::vector<std::vector<VertexId>>& faces);

/// Rotation given per vertex as a cyclic list of neighbors.
CombinatorialMap map_from_neighbor_orders(Graph g, const std::vector<std::vector<VertexId>>& orders);
std::vector<std::vector<VertexId>> neighbor_orders(const CombinatorialMap& m);

/// Belt lengths, sorted ascending.
std::vector<int> belt_lengths(const CombinatorialMap& m);

/// Rotation of every vertex reversed (mirror embedding).
CombinatorialMap mirror(const CombinatorialMap& m);

}  // namespace etc
