#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etc/coloring.hpp"
#include "etc/cutout.hpp"
#include "etc/map.hpp"

namespace etc {

/// A named graph with its coloring, embedding and vertex names.
struct NamedFamilyInstance {
  std::string family;
  int parameter = 0;
  Graph graph;
  std::optional<CombinatorialMap> map;
  TotalAssignment assignment;
  std::optional<TotalAssignment> partner;  // orthogonal partner, when built
  std::map<std::string, VertexId> names;
  std::optional<Cutout> cutout;
  std::vector<std::string> notes;  // deviations from the reference data

  VertexId at(const std::string& name) const;
  std::string name_of(VertexId v) const;
};

/// Realizes a cutout and names each vertex "(x,y)" by its canonical position.
NamedFamilyInstance from_cutout(std::string family, int parameter, Cutout c);

/// Q3 from the two orthogonal 4x1 xcutouts.
NamedFamilyInstance q3();
/// C_{4j} x K2 by extending both Q3 cutouts j times; j = 1 gives q3().
NamedFamilyInstance prism(int j);
/// 16-vertex toroidal truncated-square tiling graph from its 4x4 bicutout.
NamedFamilyInstance truncated_square_tiling();
/// Pierced family: 16g+8 vertices, ETGC, embedded with genus g.
NamedFamilyInstance gamma(int g);
/// Odd members: 16g+16 vertices with a perfect semi-total coloring.
NamedFamilyInstance g_odd(int g);
/// Ordered alternating paths whose successive reductions turn the g_odd
/// coloring into a total coloring.
std::vector<AlternatingPath> g_odd_reduction_schedule(const NamedFamilyInstance& inst);
/// Applies beta_reduce along the schedule.
TotalAssignment apply_schedule(const Graph& g, TotalAssignment a, const std::vector<AlternatingPath>& schedule);

// Reference cutouts and derived fixtures.
Cutout oct_cutout(bool right);      // the orthogonal pair of 4x1 xcutouts of Q3
Cutout oct3_left_cutout();          // 4x1 xcutout with the belt to unfold at columns 2-3
Cutout tess_left_cutout();          // 4x4 bicutout
Cutout tess_right_cutout();         // 8x4 bicutout
Cutout octaedro_left_cutout();      // two Q3 ycutouts side by side
Cutout octaedro_middle_cutout();    // after one exchange, plus a Q3
Cutout te_left_cutout();            // Q3 as a 4x2 bicutout
// The uncolored 8-vertex Moebius ladder (the self-amalgam graph) on the
// torus, in two fundamental domains: the first fails both planar
// reinterpretations, the second has a 3-edge-connected one.
Cutout klein_bicutout();
Cutout klein_diagonal_bicutout();

/// oct3 unfolded at its marked belt with l = 3, carrying the reference ladder
/// colors.
NamedFamilyInstance oct3_unfolded();

/// Planar prism C_l x K2 with its face map (uncolored).
CombinatorialMap prism_map(int ell);

/// Two Q3 copies joined by one exchange across them.
NamedFamilyInstance two_cube_exchange();
/// Best-effort reconstruction of the self-amalgam fixture (uncolored).
NamedFamilyInstance self_amalgam_fixture();

}  // namespace etc
