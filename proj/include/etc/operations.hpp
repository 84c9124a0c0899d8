#pragma once

#include <array>
#include <vector>

#include "etc/assignment.hpp"
#include "etc/cutout.hpp"
#include "etc/map.hpp"

namespace etc {

/// Ladder unfolding of the 4-face (a, b, c, d): edges ab and cd stay, bc and
/// da are replaced by rails a = r0 .. r(2l-1) = d and b = s0 .. s(2l-1) = c
/// with rungs ri si. New vertices are appended: r1..r(2l-2), then s1..s(2l-2).
struct UnfoldResult {
  CombinatorialMap map;
  std::vector<VertexId> rail_a;  // a .. d
  std::vector<VertexId> rail_b;  // b .. c
};
UnfoldResult unfold(const CombinatorialMap& m, const std::array<VertexId, 4>& belt, int ell);

/// Replacement patch for the graph-level unfolding. corners = (pa, pb, pc, pd)
/// are glued onto (a, b, c, d); pa-pb and pc-pd must be patch edges, corners
/// have patch degree 2 and every other patch vertex degree 3.
struct UnfoldPatch {
  Graph graph;
  std::array<VertexId, 4> corners{};
};
UnfoldPatch ladder_patch(int ell);

/// Graph-level unfolding along any 4-cycle (a, b, c, d) with ab, cd kept.
/// The result must be cubic, simple and of girth 4.
Graph unfold_graph(const Graph& g, const std::array<VertexId, 4>& cycle, const UnfoldPatch& patch);

/// Exchange site: cycle (v0, v1, v2, v3) with v0v1, v2v3 present and
/// v1v2, v3v0 absent.
struct ExchangeSite {
  std::array<VertexId, 4> cycle{};
};

struct ExchangeResult {
  Graph graph;
  TotalAssignment assignment;
  bool girth4 = false;  // girth of the result is 4
  bool etgc = false;    // assignment validates as an ETGC (only when girth4)
};

/// Swaps the present pair for the absent pair. Requires
/// c(v0)=c(v2) != c(v1)=c(v3), equal colors on the present pair, and that
/// color distinct from both vertex colors. The new edges take that color.
ExchangeResult exchange(const Graph& g, const TotalAssignment& a, const ExchangeSite& site);

/// Map variant: the caller supplies the neighbor orders of the four site
/// vertices after the swap; every other rotation is kept.
CombinatorialMap exchange_map(const CombinatorialMap& m, const ExchangeSite& site,
                              const std::array<std::vector<VertexId>, 4>& site_orders);

/// Glues g1 and g2 along cycles c1 ~ c2 (c1[i] matched to c2[i]); cycle
/// vertices are deleted and each path (v, c, v'') becomes the edge v v''.
/// Vertices of g1 keep their ids minus the deleted ones, g2 follows.
struct AmalgamResult {
  Graph graph;
  std::vector<VertexId> from_first;   // old id in g1 -> new id or -1
  std::vector<VertexId> from_second;  // old id in g2 -> new id or -1
};
AmalgamResult amalgam(const Graph& g1, const std::vector<VertexId>& c1, const Graph& g2,
                      const std::vector<VertexId>& c2);

/// Same gluing with both cycles in one graph (vertex-disjoint).
AmalgamResult self_amalgam(const Graph& g, const std::vector<VertexId>& c1, const std::vector<VertexId>& c2);

}  // namespace etc
