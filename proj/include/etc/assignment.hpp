#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "etc/graph.hpp"

namespace etc {

/// Colors are 0..3 (0=hazel, 1=red, 2=blue, 3=green); kUnset marks a gap.
using Color = int;
inline constexpr Color kUnset = -1;
inline constexpr int kColors = 4;

/// Partial or complete coloring of vertices and edges, indexed by VertexId
/// and EdgeId of one particular Graph.
struct TotalAssignment {
  std::vector<Color> vertex;
  std::vector<Color> edge;

  TotalAssignment() = default;
  TotalAssignment(int n, int m) : vertex(n, kUnset), edge(m, kUnset) {}
  explicit TotalAssignment(const Graph& g) : TotalAssignment(g.order(), g.size()) {}

  bool complete() const {
    auto set = [](Color c) { return c != kUnset; };
    return std::all_of(vertex.begin(), vertex.end(), set) &&
           std::all_of(edge.begin(), edge.end(), set);
  }
  bool fits(const Graph& g) const {
    return static_cast<int>(vertex.size()) == g.order() &&
           static_cast<int>(edge.size()) == g.size();
  }

  friend bool operator==(const TotalAssignment&, const TotalAssignment&) = default;
};

/// Applies a color permutation (perm[c] = new color) to every set entry.
inline TotalAssignment permute_colors(const TotalAssignment& a, const std::array<Color, 4>& perm) {
  TotalAssignment r = a;
  for (auto& c : r.vertex)
    if (c != kUnset) c = perm[c];
  for (auto& c : r.edge)
    if (c != kUnset) c = perm[c];
  return r;
}

/// True when b = perm(a) for some permutation of the four colors.
inline bool equal_up_to_color_permutation(const TotalAssignment& a, const TotalAssignment& b) {
  if (a.vertex.size() != b.vertex.size() || a.edge.size() != b.edge.size()) return false;
  std::array<Color, 4> perm{0, 1, 2, 3};
  do {
    if (permute_colors(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace etc
