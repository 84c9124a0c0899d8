#include "etc/families.hpp"

#include <functional>

#include "etc/operations.hpp"

namespace etc {

VertexId NamedFamilyInstance::at(const std::string& name) const {
  auto it = names.find(name);
  if (it == names.end()) throw Error("no vertex named '" + name + "' in " + family);
  return it->second;
}

std::string NamedFamilyInstance::name_of(VertexId v) const {
  for (const auto& [k, id] : names)
    if (id == v) return k;
  return std::to_string(v);
}

namespace {

std::string nm(char c, int i) { return std::string(1, c) + "_" + std::to_string(i); }

// Collects named vertices and colored edges, then freezes them into a graph.
class Builder {
 public:
  VertexId vertex(const std::string& name, Color c) {
    auto [it, fresh] = names_.emplace(name, static_cast<int>(vcolor_.size()));
    if (fresh) vcolor_.push_back(c);
    else if (vcolor_[it->second] != c) throw Error("vertex " + name + " colored twice");
    return it->second;
  }
  VertexId id(const std::string& name) const {
    auto it = names_.find(name);
    if (it == names_.end()) throw Error("unknown vertex " + name);
    return it->second;
  }
  void edge(const std::string& a, const std::string& b, Color c) { edges_.push_back({id(a), id(b), c}); }

  NamedFamilyInstance freeze(std::string family, int parameter) const {
    std::vector<Edge> es;
    for (const auto& e : edges_) es.push_back({e.a, e.b});
    NamedFamilyInstance inst;
    inst.family = std::move(family);
    inst.parameter = parameter;
    inst.graph = CubicGraph(static_cast<int>(vcolor_.size()), es);
    inst.assignment = TotalAssignment(inst.graph);
    inst.assignment.vertex = vcolor_;
    for (const auto& e : edges_) inst.assignment.edge[inst.graph.edge_id(e.a, e.b)] = e.c;
    inst.names = names_;
    return inst;
  }

 private:
  struct E {
    VertexId a, b;
    Color c;
  };
  std::map<std::string, VertexId> names_;
  std::vector<Color> vcolor_;
  std::vector<E> edges_;
};


std::vector<VertexId> ids(const NamedFamilyInstance& inst, const std::vector<std::string>& names) {
  std::vector<VertexId> out;
  for (const auto& n : names) out.push_back(inst.at(n));
  return out;
}

// Reference periods of the two side paths of the pierced family.
struct GammaPattern {
  std::array<Color, 4> u_vertex{0, 1, 2, 3};
  std::array<Color, 4> u_edge{2, 3, 0, 1};
  std::array<Color, 4> v_vertex{2, 3, 0, 1};
  std::array<Color, 4> v_edge{0, 1, 2, 2};
};

NamedFamilyInstance build_gamma(int g, const GammaPattern& p) {
  const int last = 4 * g + 1;
  Builder b;
  for (int i = 0; i <= last; ++i) b.vertex(nm('u', i), p.u_vertex[i % 4]);
  for (int i = 0; i < last; ++i) b.edge(nm('u', i), nm('u', i + 1), p.u_edge[i % 4]);

  std::vector<int> order{0};
  for (int m = 1; m <= 2 * g; ++m) {
    order.push_back(2 * m);
    order.push_back(2 * m - 1);
  }
  order.push_back(last);
  for (int k = 0; k < static_cast<int>(order.size()); ++k) b.vertex(nm('v', order[k]), p.v_vertex[k % 4]);
  for (int k = 0; k + 1 < static_cast<int>(order.size()); ++k)
    b.edge(nm('v', order[k]), nm('v', order[k + 1]), p.v_edge[k % 4]);

  // Crossing paths (u_i, w_i, z_i, v_i), period 4 in i.
  static constexpr std::array<std::array<Color, 4>, 4> kRungVertex{
      {{0, 2, 3, 1}, {1, 3, 2, 0}, {2, 0, 1, 3}, {3, 1, 0, 2}}};
  static constexpr std::array<std::array<Color, 3>, 4> kRungEdge{{{3, 1, 0}, {0, 1, 3}, {1, 3, 2}, {2, 3, 1}}};
  for (int i = 1; i <= 4 * g; ++i) {
    const auto& cv = kRungVertex[i % 4];
    const auto& ce = kRungEdge[i % 4];
    b.vertex(nm('w', i), cv[1]);
    b.vertex(nm('z', i), cv[2]);
    b.edge(nm('u', i), nm('w', i), ce[0]);
    b.edge(nm('w', i), nm('z', i), ce[1]);
    b.edge(nm('z', i), nm('v', i), ce[2]);
  }
  for (int m = 1; m <= 2 * g; ++m) {
    b.edge(nm('w', 2 * m - 1), nm('w', 2 * m), m % 2 ? 2 : 0);
    b.edge(nm('z', 2 * m - 1), nm('z', 2 * m), m % 2 ? 0 : 2);
  }
  // Central paths and the closing edges.
  b.vertex(nm('w', 0), 2);
  b.vertex(nm('w', last), 3);
  b.vertex(nm('z', last), 1);
  b.vertex(nm('z', 0), 0);
  b.edge(nm('u', 0), nm('w', 0), 3);
  b.edge(nm('w', 0), nm('w', last), 1);
  b.edge(nm('w', last), nm('u', last), 0);
  b.edge(nm('v', last), nm('z', last), 2);
  b.edge(nm('z', last), nm('z', 0), 3);
  b.edge(nm('z', 0), nm('v', 0), 1);
  b.edge(nm('u', 0), nm('v', last), 1);
  b.edge(nm('w', 0), nm('z', last), 0);
  b.edge(nm('w', last), nm('z', 0), 2);
  b.edge(nm('u', last), nm('v', 0), 3);

  auto inst = b.freeze("gamma", g);
  // Faces: ladder squares, the three central squares and the two side belts;
  // the corner face follows from the rotation.
  std::vector<std::vector<std::string>> faces;
  for (int m = 1; m <= 2 * g; ++m) {
    int i = 2 * m - 1, j = 2 * m;
    faces.push_back({nm('u', i), nm('u', j), nm('w', j), nm('w', i)});
    faces.push_back({nm('w', i), nm('w', j), nm('z', j), nm('z', i)});
    faces.push_back({nm('z', i), nm('z', j), nm('v', j), nm('v', i)});
  }
  faces.push_back({nm('u', 0), nm('w', 0), nm('z', last), nm('v', last)});
  faces.push_back({nm('w', 0), nm('w', last), nm('z', 0), nm('z', last)});
  faces.push_back({nm('w', last), nm('u', last), nm('v', 0), nm('z', 0)});
  std::vector<std::string> ub, vb;
  for (int i = 0; i <= last; ++i) ub.push_back(nm('u', i));
  ub.push_back(nm('w', last));
  ub.push_back(nm('w', 0));
  for (int k : order) vb.push_back(nm('v', k));
  vb.push_back(nm('z', last));
  vb.push_back(nm('z', 0));
  faces.push_back(ub);
  faces.push_back(vb);
  std::vector<std::vector<VertexId>> fid;
  for (const auto& f : faces) fid.push_back(ids(inst, f));
  inst.map = map_from_faces(inst.graph, fid);
  return inst;
}

bool gamma_valid(const NamedFamilyInstance& inst) {
  return girth(inst.graph) == 4 && is_etgc(inst.graph, inst.assignment);
}

}  // namespace

NamedFamilyInstance from_cutout(std::string family, int parameter, Cutout c) {
  auto r = realize(c);
  NamedFamilyInstance inst;
  inst.family = std::move(family);
  inst.parameter = parameter;
  inst.graph = CubicGraph(r.map.graph());
  inst.map = r.map;
  inst.assignment = r.colors;
  for (VertexId v = 0; v < static_cast<int>(r.position.size()); ++v)
    inst.names["(" + std::to_string(r.position[v].x) + "," + std::to_string(r.position[v].y) + ")"] = v;
  inst.cutout = std::move(c);
  return inst;
}

NamedFamilyInstance gamma(int g) {
  if (g < 0) throw Error("gamma needs g >= 0");
  const GammaPattern reference;
  auto inst = build_gamma(g, reference);
  if (gamma_valid(inst)) return inst;
  // Nearest period-consistent variants: one period entry changed.
  std::vector<std::pair<GammaPattern, std::string>> found;
  const std::array<std::pair<const char*, std::array<Color, 4> GammaPattern::*>, 4> fields{
      {{"u vertex", &GammaPattern::u_vertex},
       {"u edge", &GammaPattern::u_edge},
       {"v vertex", &GammaPattern::v_vertex},
       {"v edge", &GammaPattern::v_edge}}};
  for (const auto& [label, field] : fields)
    for (int pos = 0; pos < 4; ++pos)
      for (Color c = 0; c < kColors; ++c) {
        if ((reference.*field)[pos] == c) continue;
        GammaPattern p = reference;
        (p.*field)[pos] = c;
        if (gamma_valid(build_gamma(g, p)))
          found.push_back({p, std::string(label) + " period entry " + std::to_string(pos) + ": given " +
                                  std::to_string((reference.*field)[pos]) + ", used " + std::to_string(c)});
      }
  if (found.size() != 1)
    throw Error("gamma(" + std::to_string(g) + "): " + std::to_string(found.size()) +
                " validating variants of the reference pattern");
  inst = build_gamma(g, found[0].first);
  inst.notes.push_back(found[0].second);
  return inst;
}

NamedFamilyInstance g_odd(int g) {
  if (g < 0) throw Error("g_odd needs g >= 0");
  const int last = 4 * g + 3;
  Builder b;
  for (int i = 0; i <= last; ++i) b.vertex(nm('u', i), i % 2 ? 1 : 3);
  for (int i = 0; i < last; ++i) b.edge(nm('u', i), nm('u', i + 1), i % 2 ? 2 : 0);
  std::vector<int> order{0};
  for (int m = 1; m <= 2 * g + 1; ++m) {
    order.push_back(2 * m);
    order.push_back(2 * m - 1);
  }
  order.push_back(last);
  for (int k = 0; k < static_cast<int>(order.size()); ++k) b.vertex(nm('v', order[k]), k % 2 ? 1 : 3);
  for (int k = 0; k + 1 < static_cast<int>(order.size()); ++k)
    b.edge(nm('v', order[k]), nm('v', order[k + 1]), k % 2 ? 2 : 0);
  for (int i = 1; i <= last - 1; ++i) {
    const bool odd = i % 2;
    b.vertex(nm('w', i), odd ? 1 : 3);
    b.vertex(nm('z', i), odd ? 3 : 1);
    b.edge(nm('u', i), nm('w', i), odd ? 3 : 1);
    b.edge(nm('w', i), nm('z', i), 2);
    b.edge(nm('z', i), nm('v', i), odd ? 1 : 3);
  }
  for (int m = 1; m <= 2 * g + 1; ++m) {
    b.edge(nm('w', 2 * m - 1), nm('w', 2 * m), 0);
    b.edge(nm('z', 2 * m - 1), nm('z', 2 * m), 0);
  }
  b.vertex(nm('w', 0), 3);
  b.vertex(nm('w', last), 1);
  b.vertex(nm('z', last), 1);
  b.vertex(nm('z', 0), 3);
  b.edge(nm('u', 0), nm('w', 0), 1);
  b.edge(nm('w', 0), nm('w', last), 2);
  b.edge(nm('w', last), nm('u', last), 3);
  b.edge(nm('v', last), nm('z', last), 3);
  b.edge(nm('z', last), nm('z', 0), 2);
  b.edge(nm('z', 0), nm('v', 0), 1);
  b.edge(nm('u', 0), nm('v', last), 2);
  b.edge(nm('w', 0), nm('z', last), 0);
  b.edge(nm('w', last), nm('z', 0), 0);
  b.edge(nm('u', last), nm('v', 0), 2);

  auto inst = b.freeze("g_odd", g);
  inst.notes.push_back("cross edge given as u_0 w_" + std::to_string(last) + ", used u_0 v_" + std::to_string(last));
  inst.notes.push_back("v path color string read from v_" + std::to_string(last) + " back to v_0");
  std::vector<std::vector<std::string>> faces;
  for (int m = 1; m <= 2 * g + 1; ++m) {
    int i = 2 * m - 1, j = 2 * m;
    faces.push_back({nm('u', i), nm('u', j), nm('w', j), nm('w', i)});
    faces.push_back({nm('w', i), nm('w', j), nm('z', j), nm('z', i)});
    faces.push_back({nm('z', i), nm('z', j), nm('v', j), nm('v', i)});
  }
  faces.push_back({nm('u', 0), nm('w', 0), nm('z', last), nm('v', last)});
  faces.push_back({nm('w', 0), nm('w', last), nm('z', 0), nm('z', last)});
  faces.push_back({nm('w', last), nm('u', last), nm('v', 0), nm('z', 0)});
  std::vector<std::string> ub, vb;
  for (int i = 0; i <= last; ++i) ub.push_back(nm('u', i));
  ub.push_back(nm('w', last));
  ub.push_back(nm('w', 0));
  for (int k : order) vb.push_back(nm('v', k));
  vb.push_back(nm('z', last));
  vb.push_back(nm('z', 0));
  faces.push_back(ub);
  faces.push_back(vb);
  std::vector<std::vector<VertexId>> fid;
  for (const auto& f : faces) fid.push_back(ids(inst, f));
  inst.map = map_from_faces(inst.graph, fid);
  if (!is_stc(inst.graph, inst.assignment) || !tpc_partition(inst.graph, inst.assignment).perfect)
    throw Error("g_odd(" + std::to_string(g) + ") coloring is not a perfect semi-total coloring");
  return inst;
}

std::vector<AlternatingPath> g_odd_reduction_schedule(const NamedFamilyInstance& inst) {
  if (inst.family != "g_odd") throw Error("reduction schedule needs a g_odd instance");
  const int g = inst.parameter, last = 4 * g + 3;
  std::vector<AlternatingPath> out;
  auto path = [&](std::vector<std::string> names, Color c0, Color c1) {
    AlternatingPath p{ids(inst, names), {}, c0, c1, true};
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      EdgeId e = inst.graph.edge_id(p.vertices[i], p.vertices[i + 1]);
      if (e < 0) throw Error("schedule path leaves the graph");
      p.edges.push_back(e);
    }
    out.push_back(std::move(p));
  };
  for (int i = 0; i <= g; ++i)
    path({nm('u', 4 * i), nm('u', 4 * i + 1), nm('w', 4 * i + 1), nm('w', 4 * i + 2)}, 3, 0);
  path({nm('v', 0), nm('v', 2), nm('z', 2), nm('z', 1)}, 3, 0);
  for (int i = 1; i <= g; ++i)
    path({nm('v', 4 * i - 1), nm('v', 4 * i + 2), nm('z', 4 * i + 2), nm('z', 4 * i + 1)}, 3, 0);
  for (int i = 0; i <= g; ++i)
    path({nm('u', 4 * i + 1), nm('u', 4 * i + 2), nm('w', 4 * i + 2), nm('z', 4 * i + 2)}, 1, 2);
  path({nm('v', last), nm('u', 0), nm('w', 0), nm('w', last)}, 1, 2);
  for (int i = 0; i < g; ++i)
    path({nm('w', 4 * i + 3), nm('z', 4 * i + 3), nm('v', 4 * i + 3), nm('v', 4 * i + 4)}, 1, 2);
  return out;
}

TotalAssignment apply_schedule(const Graph& g, TotalAssignment a, const std::vector<AlternatingPath>& schedule) {
  for (const auto& p : schedule) a = beta_reduce(g, a, p);
  return a;
}

Cutout oct_cutout(bool right) {
  if (right) return grid_cutout(CutoutKind::xcutout, {"0 2 1 3 2 0 3 1 0", "3 0 1 2 3", "2 1 3 2 0 3 1 0 2"});
  return grid_cutout(CutoutKind::xcutout, {"0 3 1 0 2 1 3 2 0", "1 2 3 0 1", "2 0 3 1 0 2 1 3 2"});
}

NamedFamilyInstance q3() {
  auto inst = from_cutout("q3", 1, oct_cutout(false));
  auto r = realize(oct_cutout(true));
  if (!(r.map.graph() == inst.graph)) throw Error("q3 cutouts disagree");
  inst.partner = r.colors;
  if (!are_orthogonal(inst.graph, inst.assignment, *inst.partner)) throw Error("q3 colorings not orthogonal");
  return inst;
}

NamedFamilyInstance prism(int j) {
  if (j < 1) throw Error("prism needs j >= 1");
  if (j == 1) return q3();
  auto inst = from_cutout("prism", j, extend(oct_cutout(false), j, Axis::x));
  auto r = realize(extend(oct_cutout(true), j, Axis::x));
  if (!(r.map.graph() == inst.graph)) throw Error("prism cutouts disagree");
  inst.partner = r.colors;
  if (!is_etgc(inst.graph, inst.assignment) || !are_orthogonal(inst.graph, inst.assignment, *inst.partner))
    throw Error("prism colorings do not validate");
  return inst;
}

Cutout tess_left_cutout() {
  return grid_cutout(CutoutKind::bicutout, {"0 1 2 0 3 . 1 3 0", ". . 2 2 .", "2 1 0 3 1 . 3 0 2", "3 2 0 1 3",
                                            "1 . 3 1 2 3 0 2 1", "0 0 . . 0", "3 . 1 2 0 3 2 1 3", "2 3 1 0 2",
                                            "0 1 2 0 3 . 1 3 0"});
}

Cutout tess_right_cutout() {
  return grid_cutout(CutoutKind::bicutout,
                     {"0 1 2 0 3 2 1 3 0 . 2 0 3 2 1 3 0", ". . . . 1 1 . . .", "2 1 0 3 1 2 3 0 2 . 0 3 1 2 3 0 2",
                      "3 2 0 1 3 2 0 1 3", "1 . 3 1 2 3 0 2 1 0 3 1 2 3 0 2 1", "0 0 . . . . . . 0",
                      "3 . 1 2 0 3 2 1 3 0 1 2 0 3 2 1 3", "2 3 1 0 2 3 1 0 2", "0 1 2 0 3 2 1 3 0 . 2 0 3 2 1 3 0"});
}

NamedFamilyInstance truncated_square_tiling() {
  auto inst = from_cutout("tess", 1, tess_left_cutout());
  if (!is_etgc(inst.graph, inst.assignment)) throw Error("tess coloring does not validate");
  return inst;
}

Cutout oct3_left_cutout() {
  return grid_cutout(CutoutKind::xcutout, {"1 0 2 1 3 2 0 3 1", "2 3 0 1 2", "3 1 0 2 1 3 2 0 3"});
}

NamedFamilyInstance oct3_unfolded() {
  auto base = from_cutout("oct3", 3, oct3_left_cutout());
  const std::array<VertexId, 4> belt{base.at("(2,1)"), base.at("(3,1)"), base.at("(3,0)"), base.at("(2,0)")};
  auto u = unfold(*base.map, belt, 3);
  NamedFamilyInstance inst;
  inst.family = "oct3_unfolded";
  inst.parameter = 3;
  inst.graph = CubicGraph(u.map.graph());
  inst.map = u.map;
  inst.names = base.names;
  inst.assignment = TotalAssignment(inst.graph);
  inst.assignment.vertex = base.assignment.vertex;
  inst.assignment.vertex.resize(inst.graph.order(), kUnset);
  for (EdgeId e = 0; e < inst.graph.size(); ++e) {
    EdgeId old = base.graph.edge_id(inst.graph.edge(e).u, inst.graph.edge(e).v);
    if (old >= 0) inst.assignment.edge[e] = base.assignment.edge[old];
  }
  // Reference ladder colors: rails a..d and b..c, rungs r_i s_i.
  static constexpr std::array<Color, 6> kRailA{3, 1, 0, 2, 3, 1}, kRailB{0, 2, 3, 1, 0, 2}, kRung{2, 3, 1, 0, 2, 3};
  static constexpr std::array<Color, 5> kRailAEdge{0, 2, 3, 1, 0}, kRailBEdge{1, 0, 2, 3, 1};
  for (int i = 0; i < 6; ++i) {
    auto check = [&](VertexId v, Color c) {
      Color& slot = inst.assignment.vertex[v];
      if (slot != kUnset && slot != c) throw Error("oct3 ladder colors disagree with the cutout");
      slot = c;
    };
    check(u.rail_a[i], kRailA[i]);
    check(u.rail_b[i], kRailB[i]);
    inst.assignment.edge[inst.graph.edge_id(u.rail_a[i], u.rail_b[i])] = kRung[i];
    inst.names["ra_" + std::to_string(i)] = u.rail_a[i];
    inst.names["rb_" + std::to_string(i)] = u.rail_b[i];
  }
  for (int i = 0; i < 5; ++i) {
    inst.assignment.edge[inst.graph.edge_id(u.rail_a[i], u.rail_a[i + 1])] = kRailAEdge[i];
    inst.assignment.edge[inst.graph.edge_id(u.rail_b[i], u.rail_b[i + 1])] = kRailBEdge[i];
  }
  return inst;
}

Cutout octaedro_left_cutout() {
  return grid_cutout(CutoutKind::ycutout, {"1 2 0 . 2 1 3", "3 1 0 2", "2 0 3 . 1 3 0", "1 2 2 1", "0 3 1 . 3 0 2",
                                           "2 0 1 3", "3 1 2 . 0 2 1", "0 3 3 0", "1 2 0 . 2 1 3"});
}

Cutout octaedro_middle_cutout() {
  return grid_cutout(CutoutKind::ycutout,
                     {"1 2 0 3 2 1 3 . 1 2 0", "3 1 0 2 3 1", "2 0 3 . 1 3 0 . 2 0 3", "1 2 2 1 1 2",
                      "0 3 1 . 3 0 2 . 0 3 1", "2 0 1 3 2 0", "3 1 2 3 0 2 1 . 3 1 2", "0 . . 0 0 3",
                      "1 2 0 3 2 1 3 . 1 2 0"});
}

Cutout te_left_cutout() {
  return grid_cutout(CutoutKind::bicutout,
                     {"0 3 1 0 2 1 3 2 0", "1 2 . . 1", "2 0 3 1 0 2 1 3 2", ". . 3 0 .", "0 3 1 0 2 1 3 2 0"});
}

namespace {

// 8-vertex Moebius ladder on the torus: rims (x,lo) and (x,hi) for x = 0..3,
// rungs from (x,hi) to (x,lo + rung_dy), twists (3,lo)-(4,hi) and
// (3,hi)-(4,lo + twist_dy).
Cutout moebius_bicutout(int height, int lo, int hi, int rung_dy, int twist_dy) {
  Cutout c;
  c.kind = CutoutKind::bicutout;
  c.width = 4;
  c.height = height;
  for (int y : {lo, hi})
    for (int x = 0; x <= 4; ++x) c.vertices.push_back({{x, y}, kUnset});
  for (int y : {lo, hi})
    for (int x = 0; x < 3; ++x) c.edges.push_back({{{x, y}, {x + 1, y}}, kUnset});
  for (int x = 0; x <= 4; ++x) c.edges.push_back({{{x, hi}, {x, lo + rung_dy}}, kUnset});
  c.edges.push_back({{{3, lo}, {4, hi}}, kUnset});
  c.edges.push_back({{{3, hi}, {4, lo + twist_dy}}, kUnset});
  return c;
}

}  // namespace

Cutout klein_bicutout() {
  // Rungs and one twist leave through the top side.
  return moebius_bicutout(4, 1, 2, 4, 4);
}

Cutout klein_diagonal_bicutout() {
  // Rungs stay inside; one twist leaves through the top side. Same toroidal
  // map as klein_bicutout, drawn on another fundamental domain.
  auto c = moebius_bicutout(2, 0, 1, 0, 2);
  for (int x = 0; x <= 4; ++x) c.vertices.push_back({{x, 2}, kUnset});
  for (int x = 0; x < 3; ++x) c.edges.push_back({{{x, 2}, {x + 1, 2}}, kUnset});
  return c;
}

CombinatorialMap prism_map(int ell) {
  auto g = prism_graph(ell);
  std::vector<std::vector<VertexId>> faces;
  std::vector<VertexId> outer, inner;
  for (int i = 0; i < ell; ++i) {
    int j = (i + 1) % ell;
    faces.push_back({i, j, j + ell, i + ell});
    outer.push_back(i);
    inner.push_back(ell + ell - 1 - i);
  }
  faces.push_back(outer);
  faces.push_back(inner);
  return map_from_faces(g, faces);
}

NamedFamilyInstance two_cube_exchange() {
  auto cube = q3();
  const int n = cube.graph.order();
  Graph both = disjoint_union(cube.graph, cube.graph);
  TotalAssignment a(both);
  for (VertexId v = 0; v < n; ++v) a.vertex[v] = a.vertex[v + n] = cube.assignment.vertex[v];
  for (EdgeId e = 0; e < cube.graph.size(); ++e) {
    const auto& [x, y] = cube.graph.edge(e);
    a.edge[both.edge_id(x, y)] = a.edge[both.edge_id(x + n, y + n)] = cube.assignment.edge[e];
  }
  // The vertical edge at column 1 of each copy: (1,1)-(1,0).
  const VertexId x = cube.at("(1,1)"), y = cube.at("(1,0)");
  auto r = exchange(both, a, ExchangeSite{{x, y, x + n, y + n}});
  NamedFamilyInstance inst;
  inst.family = "two_cube_exchange";
  inst.graph = CubicGraph(r.graph);
  inst.assignment = r.assignment;
  for (const auto& [k, v] : cube.names) {
    inst.names["L" + k] = v;
    inst.names["R" + k] = v + n;
  }
  if (!r.etgc) throw Error("two-cube exchange lost the ETGC");
  return inst;
}

NamedFamilyInstance self_amalgam_fixture() {
  auto base = two_cube_exchange();
  // Glue the two far faces, one per cube: columns 3 and 0 of each copy's
  // cutout are the faces opposite the exchanged column.
  auto face = [&](const std::string& side) {
    return ids(base, {side + "(3,1)", side + "(0,1)", side + "(0,0)", side + "(3,0)"});
  };
  auto r = self_amalgam(base.graph, face("L"), face("R"));
  NamedFamilyInstance inst;
  inst.family = "self_amalgam_reconstructed";
  inst.graph = CubicGraph(r.graph);
  inst.assignment = TotalAssignment(inst.graph);
  for (const auto& [k, v] : base.names)
    if (r.from_first[v] >= 0) inst.names[k] = r.from_first[v];
  inst.notes.push_back("reconstructed: gluing inferred from the description, not from a drawn cutout");
  return inst;
}

}  // namespace etc
