#include "etc/trace.hpp"

#include "etc/operations.hpp"

namespace etc {

NamedFamilyInstance construct_family(const std::string& family, int parameter) {
  if (family == "q3") return q3();
  if (family == "prism") return prism(parameter);
  if (family == "tess") return truncated_square_tiling();
  if (family == "tess-right") return from_cutout(family, 2, tess_right_cutout());
  if (family == "gamma") return gamma(parameter);
  if (family == "godd") return g_odd(parameter);
  if (family == "oct3") return from_cutout(family, 3, oct3_left_cutout());
  if (family == "oct3-unfolded") return oct3_unfolded();
  if (family == "te") return from_cutout(family, 1, te_left_cutout());
  if (family == "octaedro-left") return from_cutout(family, 0, octaedro_left_cutout());
  if (family == "octaedro-middle") return from_cutout(family, 1, octaedro_middle_cutout());
  if (family == "klein") return from_cutout(family, 0, klein_bicutout());
  if (family == "klein-diagonal") return from_cutout(family, 0, klein_diagonal_bicutout());
  if (family == "two-cube-exchange") return two_cube_exchange();
  throw Error("unknown family '" + family + "'");
}

namespace {

std::array<VertexId, 4> four(const NamedFamilyInstance& inst, const TraceStep& s, std::size_t which) {
  if (s.sites.size() <= which || s.sites[which].size() != 4) throw Error("step needs a 4-vertex site");
  std::array<VertexId, 4> out{};
  for (int i = 0; i < 4; ++i) out[i] = inst.at(s.sites[which][i]);
  return out;
}

std::vector<VertexId> as_vector(const std::array<VertexId, 4>& a) { return {a.begin(), a.end()}; }

// Keeps colors of surviving vertices and edges after a relabeling old -> new.
TotalAssignment carry(const Graph& from, const TotalAssignment& a, const Graph& to,
                      const std::vector<VertexId>& new_id) {
  TotalAssignment out(to);
  for (VertexId v = 0; v < from.order(); ++v)
    if (new_id[v] >= 0) out.vertex[new_id[v]] = a.vertex[v];
  for (EdgeId e = 0; e < from.size(); ++e) {
    const auto [u, v] = from.edge(e);
    if (new_id[u] < 0 || new_id[v] < 0) continue;
    if (EdgeId f = to.edge_id(new_id[u], new_id[v]); f >= 0) out.edge[f] = a.edge[e];
  }
  return out;
}

NamedFamilyInstance combine(const NamedFamilyInstance& left, const NamedFamilyInstance& right, Graph g,
                            const std::vector<VertexId>& from_left, const std::vector<VertexId>& from_right) {
  NamedFamilyInstance out;
  out.family = left.family + "+" + right.family;
  out.graph = std::move(g);
  out.assignment = TotalAssignment(out.graph);
  TotalAssignment l = carry(left.graph, left.assignment, out.graph, from_left);
  TotalAssignment r = carry(right.graph, right.assignment, out.graph, from_right);
  for (VertexId v = 0; v < out.graph.order(); ++v)
    out.assignment.vertex[v] = l.vertex[v] != kUnset ? l.vertex[v] : r.vertex[v];
  for (EdgeId e = 0; e < out.graph.size(); ++e)
    out.assignment.edge[e] = l.edge[e] != kUnset ? l.edge[e] : r.edge[e];
  for (const auto& [k, v] : left.names)
    if (from_left[v] >= 0) out.names["L" + k] = from_left[v];
  for (const auto& [k, v] : right.names)
    if (from_right[v] >= 0) out.names["R" + k] = from_right[v];
  return out;
}

NamedFamilyInstance apply_step(const NamedFamilyInstance& cur, const TraceStep& s, int index) {
  if (s.op == "extend") {
    if (!cur.cutout) throw Error("extend needs a cutout");
    return from_cutout(cur.family, cur.parameter, extend(*cur.cutout, s.copies, s.axis));
  }
  if (s.op == "unfold") {
    if (!cur.map) throw Error("unfold needs a map");
    auto u = unfold(*cur.map, four(cur, s, 0), s.ell);
    NamedFamilyInstance out;
    out.family = cur.family;
    out.parameter = cur.parameter;
    out.graph = u.map.graph();
    out.map = u.map;
    out.names = cur.names;
    std::vector<VertexId> same(cur.graph.order());
    for (VertexId v = 0; v < cur.graph.order(); ++v) same[v] = v;
    out.assignment = carry(cur.graph, cur.assignment, out.graph, same);
    const std::string tag = out.names.count("ra_0") ? "s" + std::to_string(index) + "." : "";
    for (std::size_t i = 0; i < u.rail_a.size(); ++i) {
      out.names[tag + "ra_" + std::to_string(i)] = u.rail_a[i];
      out.names[tag + "rb_" + std::to_string(i)] = u.rail_b[i];
    }
    return out;
  }
  if (s.op == "exchange") {
    auto r = exchange(cur.graph, cur.assignment, ExchangeSite{four(cur, s, 0)});
    if (!r.girth4) throw Error("exchange result does not have girth 4");
    if (!r.etgc) throw Error("exchange result is not an ETGC");
    NamedFamilyInstance out;
    out.family = cur.family;
    out.parameter = cur.parameter;
    out.graph = r.graph;
    out.assignment = r.assignment;
    out.names = cur.names;
    return out;
  }
  if (s.op == "union") {
    auto other = construct_family(s.family, s.parameter);
    const int n = cur.graph.order();
    std::vector<VertexId> l(n), r(other.graph.order());
    for (VertexId v = 0; v < n; ++v) l[v] = v;
    for (VertexId v = 0; v < other.graph.order(); ++v) r[v] = v + n;
    return combine(cur, other, disjoint_union(cur.graph, other.graph), l, r);
  }
  if (s.op == "self_amalgam") {
    auto r = self_amalgam(cur.graph, as_vector(four(cur, s, 0)), as_vector(four(cur, s, 1)));
    NamedFamilyInstance out;
    out.family = cur.family;
    out.graph = r.graph;
    out.assignment = TotalAssignment(out.graph);
    for (const auto& [k, v] : cur.names)
      if (r.from_first[v] >= 0) out.names[k] = r.from_first[v];
    return out;
  }
  if (s.op == "amalgam") {
    auto other = construct_family(s.family, s.parameter);
    auto r = amalgam(cur.graph, as_vector(four(cur, s, 0)), other.graph, as_vector(four(other, s, 1)));
    auto out = combine(cur, other, r.graph, r.from_first, r.from_second);
    out.assignment = TotalAssignment(out.graph);
    return out;
  }
  if (s.op == "spray") {
    if (!cur.map) throw Error("spray needs a map");
    auto res = spray_propagate(*cur.map, algo_seed(*cur.map, four(cur, s, 0), s.pattern));
    if (res.status != SprayStatus::complete)
      throw Error("spray ended " + to_string(res.status) +
                  (res.conflict ? " by the " + res.conflict->rule + " rule" : std::string()));
    NamedFamilyInstance out = cur;
    out.assignment = res.assignment;
    return out;
  }
  if (s.op == "search") {
    auto r = find_etc(cur.graph, s.mode);
    if (r.verdict != SearchVerdict::found) throw Error("search verdict " + to_string(r.verdict));
    NamedFamilyInstance out = cur;
    out.assignment = *r.certificate;
    return out;
  }
  throw Error("unknown operation '" + s.op + "'");
}

void validate(const NamedFamilyInstance& inst, const TraceStep& s) {
  if (!inst.graph.is_cubic()) throw Error("result is not cubic");
  if (girth(inst.graph) != 4) throw Error("result does not have girth 4");
  if (!inst.assignment.fits(inst.graph)) throw Error("coloring does not match the graph");
  if (!inst.assignment.complete()) return;
  // The odd family starts from a perfect semi-total coloring.
  if (s.op == "start" && !is_etc(inst.graph, inst.assignment)) {
    if (!is_stc(inst.graph, inst.assignment)) throw Error("coloring is neither an ETC nor an STC");
    return;
  }
  const bool strict = s.op == "spray" || s.op == "exchange" || (s.op == "search" && s.mode == SearchMode::etgc);
  if (strict ? !is_etgc(inst.graph, inst.assignment) : !is_etc(inst.graph, inst.assignment))
    throw Error(strict ? "coloring is not an ETGC" : "coloring is not an ETC");
}

}  // namespace

NamedFamilyInstance replay(const ConstructionTrace& t) {
  if (t.steps.empty() || t.steps.front().op != "start") throw TraceError(0, "start", "trace must begin with start");
  NamedFamilyInstance cur;
  for (int i = 0; i < static_cast<int>(t.steps.size()); ++i) {
    const auto& s = t.steps[i];
    try {
      if (s.op == "start") {
        if (i != 0) throw Error("start may only open a trace");
        cur = construct_family(s.family, s.parameter);
      } else {
        cur = apply_step(cur, s, i);
      }
      validate(cur, s);
    } catch (const TraceError&) {
      throw;
    } catch (const std::exception& e) {
      throw TraceError(i, s.op, e.what());
    }
  }
  return cur;
}

std::vector<ConstructionTrace> builtin_traces() {
  auto start = [](std::string family, int parameter = 0) {
    TraceStep s;
    s.op = "start";
    s.family = std::move(family);
    s.parameter = parameter;
    return s;
  };
  auto with_sites = [](std::string op, std::vector<std::vector<std::string>> sites) {
    TraceStep s;
    s.op = std::move(op);
    s.sites = std::move(sites);
    return s;
  };
  std::vector<ConstructionTrace> out;
  out.push_back({"q3", {start("q3", 1)}});

  TraceStep ext;
  ext.op = "extend";
  ext.copies = 2;
  ext.axis = Axis::x;
  out.push_back({"q3-extend-2", {start("q3", 1), ext}});

  out.push_back({"tess-exchange", {start("tess"), with_sites("exchange", {{"(0,0)", "(1,0)", "(1,3)", "(0,3)"}})}});

  TraceStep unf = with_sites("unfold", {{"(2,1)", "(3,1)", "(3,0)", "(2,0)"}});
  unf.ell = 3;
  TraceStep spr = with_sites("spray", {{"(0,1)", "(1,1)", "(1,0)", "(0,0)"}});
  out.push_back({"oct3-unfold-spray", {start("oct3"), unf, spr}});

  TraceStep uni;
  uni.op = "union";
  uni.family = "q3";
  uni.parameter = 1;
  auto cubes = std::vector<TraceStep>{start("q3", 1), uni,
                                      with_sites("exchange", {{"L(1,1)", "L(1,0)", "R(1,1)", "R(1,0)"}})};
  out.push_back({"two-cube-exchange", cubes});

  auto glued = cubes;
  glued.push_back(with_sites("self_amalgam", {{"L(3,1)", "L(0,1)", "L(0,0)", "L(3,0)"},
                                              {"R(3,1)", "R(0,1)", "R(0,0)", "R(3,0)"}}));
  out.push_back({"two-cube-self-amalgam", glued});

  out.push_back({"tess-extend-2", {start("tess"), ext}});
  TraceStep srch;
  srch.op = "search";
  srch.mode = SearchMode::etgc;
  out.push_back({"prism-search", {start("prism", 3), srch}});
  out.push_back({"gamma-1", {start("gamma", 1)}});
  return out;
}

}  // namespace etc
