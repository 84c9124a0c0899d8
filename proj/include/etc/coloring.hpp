#pragma once

#include <vector>

#include "etc/assignment.hpp"

namespace etc {

struct ColorClass {
  Color color = 0;
  std::vector<VertexId> vertices;
};

/// Vertex classes in color order; colors that do not occur are omitted.
std::vector<ColorClass> color_classes(const TotalAssignment& a);

// Validators. Those taking a complete assignment throw on gaps.
bool is_total_coloring(const Graph& g, const TotalAssignment& a);
bool is_efficient_dominating_set(const Graph& g, const std::vector<VertexId>& s);
bool is_etc(const Graph& g, const TotalAssignment& a);
/// Both throw unless girth(g) == 4.
bool is_vegc(const Graph& g, const TotalAssignment& a);
bool is_etgc(const Graph& g, const TotalAssignment& a);
bool is_egc(const Graph& g, const std::vector<Color>& edge_color);

/// Same vertex coloring, different color on every edge. Throws unless both
/// are ETCs.
bool are_orthogonal(const Graph& g, const TotalAssignment& a1, const TotalAssignment& a2);

struct EdgeColoredGraph {
  Graph graph;
  std::vector<Color> edge;
};

/// Edge coloring of g x K2 (layer copy at +n): layer one from a1, layer two
/// from a2, rung at v in the shared vertex color. Throws unless orthogonal.
EdgeColoredGraph prism_egc(const Graph& g, const TotalAssignment& a1, const TotalAssignment& a2);

/// Semi-total: proper on edges, each vertex off its incident edges.
/// Adjacent vertices may agree. Incomplete input is not an STC.
bool is_stc(const Graph& g, const TotalAssignment& a);

/// Edges whose ends share a color.
std::vector<EdgeId> beta_edges(const Graph& g, const TotalAssignment& a);

/// Every vertex has exactly one neighbor in s.
bool is_total_perfect_code(const Graph& g, const std::vector<VertexId>& s);

struct TpcPartition {
  bool perfect = false;  // exactly two classes, both total perfect codes
  std::vector<ColorClass> classes;
};
TpcPartition tpc_partition(const Graph& g, const TotalAssignment& a);

/// (v0, e1, v1, ..., ek, vk) with v0 and the even edges in c0, the odd edges
/// in c1, and vk in whichever of c0, c1 its edge ek does not carry.
struct AlternatingPath {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  Color c0 = 0;
  Color c1 = 0;
  bool maximal = false;
};

/// Each path is a whole component of the {c0,c1} edge subgraph whose two
/// ends obey the end conditions. Oriented so v0 carries c0 (smaller id first
/// when both ends do).
std::vector<AlternatingPath> find_maximal_alternating_paths(const Graph& g, const TotalAssignment& a,
                                                            Color c0, Color c1);

/// Swaps c0 and c1 on v0, every path edge and vk. Interior vertices keep
/// their colors. Throws unless p is a maximal alternating path of a.
TotalAssignment beta_reduce(const Graph& g, const TotalAssignment& a, const AlternatingPath& p);

}  // namespace etc
