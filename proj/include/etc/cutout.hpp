#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etc/assignment.hpp"
#include "etc/map.hpp"

namespace etc {

enum class CutoutKind { plain, xcutout, ycutout, bicutout, zonogon };
enum class Axis { x, y };

std::string to_string(CutoutKind k);
CutoutKind cutout_kind_from_string(const std::string& s);

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

struct CutoutVertex {
  Point at;
  Color color = kUnset;
};

/// Polyline with integer breakpoints. Coordinates live in the universal
/// cover, so a path may leave the rectangle; its ends are vertex positions up
/// to the identifications.
struct CutoutEdge {
  std::vector<Point> path;
  Color color = kUnset;
};

/// The map realized by a cutout, with the colors and positions it carried.
struct RealizedCutout {
  CombinatorialMap map;
  TotalAssignment colors;
  std::vector<Point> position;  // one per vertex, inside the fundamental domain
};

/// Rectangular (x/y/bi) cutout on an integer grid, or a zonogon cutout kept as
/// an explicit map with its side pairs listed as darts.
struct Cutout {
  CutoutKind kind = CutoutKind::plain;
  int width = 0;
  int height = 0;
  std::vector<CutoutVertex> vertices;
  std::vector<CutoutEdge> edges;

  // Zonogon cutouts only.
  std::optional<RealizedCutout> explicit_map;
  std::vector<std::vector<Dart>> side_pairs;

  bool identifies_x() const { return kind == CutoutKind::xcutout || kind == CutoutKind::bicutout; }
  bool identifies_y() const { return kind == CutoutKind::ycutout || kind == CutoutKind::bicutout; }
};

/// Parses a grid display. Rows run top to bottom and alternate between vertex
/// rows ("v e v e ... v") and vertical-edge rows (one token per column).
/// Vertex tokens: a color digit, 'o' (uncolored) or '_' (no vertex).
/// Edge tokens: a color digit, '-' or '|' (uncolored), '.' (absent).
Cutout grid_cutout(CutoutKind kind, const std::vector<std::string>& rows);

/// Glues identified boundary points, reads the rotation counterclockwise from
/// the drawing and checks that edge interiors do not cross.
RealizedCutout realize(const Cutout& c);

/// Drops one identification of a bicutout; `keep` names the axis whose
/// identification survives. Edges crossing the dropped side are removed.
Cutout reinterpret(const Cutout& c, Axis keep);

/// True iff at least one planar reinterpretation is 3-edge-connected once its
/// stubs are resolved (see resolve_stubs).
bool is_toroidally_3_edge_connected(const Cutout& c);

/// Deletes degree <= 1 vertices and suppresses degree-2 vertices until none
/// remain. Returns the multigraph as (vertex count, edge list).
std::pair<int, std::vector<Edge>> resolve_stubs(const Graph& g);

/// Stacks n copies along an axis, sharing borders.
Cutout extend(const Cutout& c, int copies, Axis axis);

/// Zonogon cutout wrapping an explicit map.
Cutout zonogon_cutout(RealizedCutout m, std::vector<std::vector<Dart>> side_pairs);

}  // namespace etc
