#include "etc/io.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace etc {

std::optional<CombinatorialMap> GraphDocument::map() const {
  if (!rotation) return std::nullopt;
  return map_from_neighbor_orders(graph, *rotation);
}

namespace {

bool same_cutout(const Cutout& a, const Cutout& b) {
  auto vs = [](const Cutout& c) {
    std::vector<std::tuple<int, int, Color>> out;
    for (const auto& v : c.vertices) out.emplace_back(v.at.x, v.at.y, v.color);
    return out;
  };
  auto es = [](const Cutout& c) {
    std::vector<std::pair<std::vector<Point>, Color>> out;
    for (const auto& e : c.edges) out.emplace_back(e.path, e.color);
    return out;
  };
  return a.kind == b.kind && a.width == b.width && a.height == b.height && vs(a) == vs(b) && es(a) == es(b);
}

bool same_path(const AlternatingPath& a, const AlternatingPath& b) {
  return a.vertices == b.vertices && a.edges == b.edges && a.c0 == b.c0 && a.c1 == b.c1 &&
         a.maximal == b.maximal;
}

}  // namespace

bool structurally_equal(const GraphDocument& a, const GraphDocument& b) {
  if (!(a.graph == b.graph) || a.rotation != b.rotation || a.assignments != b.assignments ||
      a.names != b.names || a.family != b.family || a.parameter != b.parameter || a.notes != b.notes)
    return false;
  if (a.cutout.has_value() != b.cutout.has_value()) return false;
  if (a.cutout && !same_cutout(*a.cutout, *b.cutout)) return false;
  if (a.schedule.size() != b.schedule.size()) return false;
  for (std::size_t i = 0; i < a.schedule.size(); ++i)
    if (!same_path(a.schedule[i], b.schedule[i])) return false;
  return true;
}

GraphDocument document_from(const NamedFamilyInstance& inst) {
  GraphDocument d;
  d.graph = inst.graph;
  if (inst.map) d.rotation = neighbor_orders(*inst.map);
  if (inst.cutout && inst.cutout->kind != CutoutKind::zonogon) d.cutout = inst.cutout;
  d.assignments["primary"] = inst.assignment;
  if (inst.partner) d.assignments["partner"] = *inst.partner;
  d.names = inst.names;
  d.family = inst.family;
  d.parameter = inst.parameter;
  d.notes = inst.notes;
  if (inst.family == "g_odd") d.schedule = g_odd_reduction_schedule(inst);
  return d;
}

namespace {

Json color_array(const std::vector<Color>& cs) {
  Json a = Json::array();
  for (Color c : cs) a.push_back(c == kUnset ? Json(nullptr) : Json(c));
  return a;
}

Json point(Point p) { return Json::array({p.x, p.y}); }

template <class T>
T field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(where + ": bad '" + key + "'");
  }
}

std::vector<Color> read_colors(const Json& a, std::size_t count, const std::string& where) {
  if (!a.is_array() || a.size() != count)
    throw ParseError(where + ": expected " + std::to_string(count) + " entries");
  std::vector<Color> out;
  for (const auto& x : a) {
    if (x.is_null()) {
      out.push_back(kUnset);
    } else if (x.is_number_integer() && x.get<int>() >= 0 && x.get<int>() < kColors) {
      out.push_back(x.get<int>());
    } else {
      throw ParseError(where + ": colors must be 0..3 or null");
    }
  }
  return out;
}

Point read_point(const Json& p, const std::string& where) {
  if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
    throw ParseError(where + ": points are [x, y] integer pairs");
  return {p[0].get<int>(), p[1].get<int>()};
}

Color read_optional_color(const Json& j, const std::string& where) {
  if (!j.contains("color") || j["color"].is_null()) return kUnset;
  const auto& c = j["color"];
  if (!c.is_number_integer() || c.get<int>() < 0 || c.get<int>() >= kColors)
    throw ParseError(where + ": colors must be 0..3 or null");
  return c.get<int>();
}

}  // namespace

Json to_json(const GraphDocument& d) {
  Json j;
  j["format_version"] = kFormatVersion;
  if (!d.family.empty()) {
    j["family"] = d.family;
    j["parameter"] = d.parameter;
  }
  j["n"] = d.graph.order();
  Json edges = Json::array();
  for (const auto& e : d.graph.edges()) edges.push_back(Json::array({e.u, e.v}));
  j["edges"] = edges;
  if (d.rotation) j["rotation"] = *d.rotation;
  if (d.cutout) {
    const auto& c = *d.cutout;
    Json cj;
    cj["kind"] = to_string(c.kind);
    cj["width"] = c.width;
    cj["height"] = c.height;
    Json vs = Json::array();
    for (const auto& v : c.vertices) {
      Json vj;
      vj["at"] = point(v.at);
      vj["color"] = v.color == kUnset ? Json(nullptr) : Json(v.color);
      vs.push_back(vj);
    }
    cj["placements"] = vs;
    Json es = Json::array();
    for (const auto& e : c.edges) {
      Json ej;
      Json path = Json::array();
      for (Point p : e.path) path.push_back(point(p));
      ej["path"] = path;
      ej["color"] = e.color == kUnset ? Json(nullptr) : Json(e.color);
      es.push_back(ej);
    }
    cj["edges"] = es;
    Json ids = Json::array();
    if (c.identifies_x()) ids.push_back("left=right");
    if (c.identifies_y()) ids.push_back("bottom=top");
    cj["identifications"] = ids;
    j["cutout"] = cj;
  }
  if (!d.assignments.empty()) {
    Json as = Json::object();
    for (const auto& [name, a] : d.assignments)
      as[name] = Json{{"vertex", color_array(a.vertex)}, {"edge", color_array(a.edge)}};
    j["assignments"] = as;
  }
  if (!d.names.empty()) {
    Json nt = Json::object();
    for (const auto& [k, v] : d.names) nt[k] = v;
    j["name_table"] = nt;
  }
  if (!d.notes.empty()) j["notes"] = d.notes;
  if (!d.schedule.empty()) {
    Json s = Json::array();
    for (const auto& p : d.schedule)
      s.push_back(Json{{"c0", p.c0}, {"c1", p.c1}, {"vertices", p.vertices}, {"edges", p.edges}});
    j["reduction_schedule"] = s;
  }
  return j;
}

GraphDocument document_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  const int version = field<int>(j, "format_version", "document");
  if (version != kFormatVersion) throw ParseError("unsupported format_version " + std::to_string(version));
  GraphDocument d;
  const int n = field<int>(j, "n", "document");
  if (n < 0) throw ParseError("n must be non-negative");
  const auto raw = field<std::vector<std::array<int, 2>>>(j, "edges", "document");
  std::vector<Edge> es;
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : raw) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range");
    if (u == v) throw ParseError("loops are not allowed");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) throw ParseError("repeated edge");
    es.push_back({std::min(u, v), std::max(u, v)});
  }
  d.graph = Graph(n, es);
  if (j.contains("family")) {
    d.family = field<std::string>(j, "family", "document");
    d.parameter = j.contains("parameter") ? field<int>(j, "parameter", "document") : 0;
  }
  if (j.contains("rotation")) {
    auto rot = field<std::vector<std::vector<VertexId>>>(j, "rotation", "document");
    try {
      map_from_neighbor_orders(d.graph, rot);
    } catch (const Error& e) {
      throw ParseError(std::string("rotation: ") + e.what());
    }
    d.rotation = std::move(rot);
  }
  if (j.contains("cutout")) {
    const auto& cj = j["cutout"];
    Cutout c;
    try {
      c.kind = cutout_kind_from_string(field<std::string>(cj, "kind", "cutout"));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(std::string("cutout: ") + e.what());
    }
    if (c.kind == CutoutKind::zonogon) throw ParseError("cutout: zonogon drawings are not serialized");
    c.width = field<int>(cj, "width", "cutout");
    c.height = field<int>(cj, "height", "cutout");
    if (!cj.contains("placements") || !cj["placements"].is_array()) throw ParseError("cutout: missing 'placements'");
    for (const auto& vj : cj["placements"])
      c.vertices.push_back({read_point(vj.value("at", Json()), "cutout placement"), read_optional_color(vj, "cutout")});
    if (!cj.contains("edges") || !cj["edges"].is_array()) throw ParseError("cutout: missing 'edges'");
    for (const auto& ej : cj["edges"]) {
      CutoutEdge e;
      if (!ej.contains("path") || !ej["path"].is_array()) throw ParseError("cutout edge: missing 'path'");
      for (const auto& p : ej["path"]) e.path.push_back(read_point(p, "cutout edge"));
      e.color = read_optional_color(ej, "cutout edge");
      c.edges.push_back(std::move(e));
    }
    try {
      if (!(realize(c).map.graph() == d.graph)) throw ParseError("cutout does not realize the listed edges");
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(std::string("cutout: ") + e.what());
    }
    d.cutout = std::move(c);
  }
  if (j.contains("assignments")) {
    const auto& as = j["assignments"];
    if (!as.is_object()) throw ParseError("assignments must be an object");
    for (const auto& [name, aj] : as.items()) {
      TotalAssignment a;
      if (!aj.is_object() || !aj.contains("vertex") || !aj.contains("edge"))
        throw ParseError("assignment '" + name + "' needs vertex and edge arrays");
      a.vertex = read_colors(aj["vertex"], n, "assignment '" + name + "' vertex");
      a.edge = read_colors(aj["edge"], d.graph.size(), "assignment '" + name + "' edge");
      d.assignments[name] = std::move(a);
    }
  }
  if (j.contains("name_table")) {
    const auto& nt = j["name_table"];
    if (!nt.is_object()) throw ParseError("name_table must be an object");
    for (const auto& [k, v] : nt.items()) {
      if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() >= n)
        throw ParseError("name_table entry '" + k + "' out of range");
      d.names[k] = v.get<int>();
    }
  }
  if (j.contains("notes")) d.notes = field<std::vector<std::string>>(j, "notes", "document");
  if (j.contains("reduction_schedule")) {
    if (!j["reduction_schedule"].is_array()) throw ParseError("reduction_schedule must be an array");
    for (const auto& pj : j["reduction_schedule"]) {
      AlternatingPath p;
      p.c0 = field<int>(pj, "c0", "schedule");
      p.c1 = field<int>(pj, "c1", "schedule");
      p.vertices = field<std::vector<VertexId>>(pj, "vertices", "schedule");
      p.edges = field<std::vector<EdgeId>>(pj, "edges", "schedule");
      p.maximal = true;
      for (VertexId v : p.vertices)
        if (v < 0 || v >= n) throw ParseError("schedule vertex out of range");
      for (EdgeId e : p.edges)
        if (e < 0 || e >= d.graph.size()) throw ParseError("schedule edge out of range");
      d.schedule.push_back(std::move(p));
    }
  }
  return d;
}

GraphDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return document_from_json(j);
}

namespace {

bool flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& x : j)
    if (x.is_object() || (x.is_array() && !std::all_of(x.begin(), x.end(), [](const Json& y) {
                            return !y.is_structured();
                          })))
      return false;
  return true;
}

void format_into(const Json& j, int depth, std::string& out) {
  if (flat(j) || j.dump().size() <= 96) {
    out += j.dump();
    return;
  }
  const std::string pad(2 * (depth + 1), ' ');
  const bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (obj) out += Json(it.key()).dump() + ": ";
    format_into(*it, depth + 1, out);
  }
  out += "\n" + std::string(2 * depth, ' ') + (obj ? "}" : "]");
}

}  // namespace

std::string format_json(const Json& j) {
  std::string out;
  format_into(j, 0, out);
  return out + "\n";
}

std::string serialize(const GraphDocument& d) { return format_json(to_json(d)); }

std::string color_hex(Color c) {
  switch (c) {
    case 0: return "#8e7618";  // hazel
    case 1: return "#d62728";  // red
    case 2: return "#1f5fd6";  // blue
    case 3: return "#2ca02c";  // green
  }
  return "#444444";
}

namespace {

const TotalAssignment* pick_assignment(const GraphDocument& d, const std::string& name) {
  auto it = d.assignments.find(name);
  return it == d.assignments.end() ? nullptr : &it->second;
}

std::string label_of(const GraphDocument& d, VertexId v) {
  for (const auto& [k, id] : d.names)
    if (id == v) return k;
  return std::to_string(v);
}

}  // namespace

std::string to_dot(const GraphDocument& d, const std::string& assignment) {
  const TotalAssignment* a = pick_assignment(d, assignment);
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle, style=filled, fontcolor=white];\n";
  for (VertexId v = 0; v < d.graph.order(); ++v) {
    const Color c = a ? a->vertex[v] : kUnset;
    out << "  v" << v << " [label=\"" << label_of(d, v) << "\", fillcolor=\"" << color_hex(c) << "\"];\n";
  }
  for (EdgeId e = 0; e < d.graph.size(); ++e) {
    const auto [u, v] = d.graph.edge(e);
    const Color c = a ? a->edge[e] : kUnset;
    out << "  v" << u << " -- v" << v << " [color=\"" << color_hex(c) << "\", penwidth=2";
    if (c != kUnset) out << ", label=\"" << c << "\"";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_svg(const GraphDocument& d, const std::string& assignment) {
  if (!d.cutout) throw Error("svg export needs cutout placements");
  const Cutout& c = *d.cutout;
  const auto real = realize(c);
  const TotalAssignment* a = pick_assignment(d, assignment);
  // Colors come from the chosen assignment through the realized ids.
  std::map<Point, VertexId> id_at;
  for (VertexId v = 0; v < static_cast<int>(real.position.size()); ++v) id_at[real.position[v]] = v;
  auto canon = [&](Point p) {
    Point q = p;
    if (c.identifies_x() && c.width) q.x = ((p.x % c.width) + c.width) % c.width;
    if (c.identifies_y() && c.height) q.y = ((p.y % c.height) + c.height) % c.height;
    return q;
  };
  const int unit = 60, pad = 40;
  auto sx = [&](int x) { return pad + x * unit; };
  auto sy = [&](int y) { return pad + (c.height - y) * unit; };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * pad + c.width * unit << "\" height=\""
      << 2 * pad + c.height * unit << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  auto side = [&](int x1, int y1, int x2, int y2, bool identified) {
    out << "<line x1=\"" << sx(x1) << "\" y1=\"" << sy(y1) << "\" x2=\"" << sx(x2) << "\" y2=\"" << sy(y2)
        << "\" stroke=\"#999999\" stroke-width=\"1\"" << (identified ? " stroke-dasharray=\"6,4\"" : "")
        << "/>\n";
  };
  side(0, 0, 0, c.height, c.identifies_x());
  side(c.width, 0, c.width, c.height, c.identifies_x());
  side(0, 0, c.width, 0, c.identifies_y());
  side(0, c.height, c.width, c.height, c.identifies_y());
  for (const auto& e : c.edges) {
    Color col = e.color;
    if (a) {
      auto iu = id_at.find(canon(e.path.front())), iv = id_at.find(canon(e.path.back()));
      if (iu != id_at.end() && iv != id_at.end())
        if (EdgeId id = d.graph.edge_id(iu->second, iv->second); id >= 0) col = a->edge[id];
    }
    out << "<polyline fill=\"none\" stroke=\"" << color_hex(col) << "\" stroke-width=\"4\" points=\"";
    for (std::size_t i = 0; i < e.path.size(); ++i)
      out << (i ? " " : "") << sx(e.path[i].x) << "," << sy(e.path[i].y);
    out << "\"/>\n";
  }
  for (const auto& v : c.vertices) {
    Color col = v.color;
    if (a)
      if (auto it = id_at.find(canon(v.at)); it != id_at.end()) col = a->vertex[it->second];
    out << "<circle cx=\"" << sx(v.at.x) << "\" cy=\"" << sy(v.at.y) << "\" r=\"10\" fill=\"" << color_hex(col)
        << "\" stroke=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

namespace {

SprayPattern pattern_from(const std::string& s) {
  if (s == "left") return SprayPattern::left;
  if (s == "right") return SprayPattern::right;
  throw ParseError("pattern must be left or right");
}

SearchMode mode_from(const std::string& s) {
  if (s == "etc") return SearchMode::etc;
  if (s == "etgc") return SearchMode::etgc;
  throw ParseError("mode must be etc or etgc");
}

}  // namespace

ConstructionTrace trace_from_json(const Json& j) {
  ConstructionTrace t;
  const Json* steps = &j;
  if (j.is_object()) {
    t.label = j.value("label", std::string());
    if (!j.contains("steps")) throw ParseError("trace: missing 'steps'");
    steps = &j["steps"];
  }
  if (!steps->is_array()) throw ParseError("trace steps must be an array");
  for (const auto& sj : *steps) {
    TraceStep s;
    s.op = field<std::string>(sj, "op", "trace step");
    if (sj.contains("family")) s.family = field<std::string>(sj, "family", "trace step");
    if (sj.contains("parameter")) s.parameter = field<int>(sj, "parameter", "trace step");
    if (sj.contains("copies")) s.copies = field<int>(sj, "copies", "trace step");
    if (sj.contains("axis")) {
      auto ax = field<std::string>(sj, "axis", "trace step");
      if (ax != "x" && ax != "y") throw ParseError("axis must be x or y");
      s.axis = ax == "x" ? Axis::x : Axis::y;
    }
    if (sj.contains("ell")) s.ell = field<int>(sj, "ell", "trace step");
    if (sj.contains("pattern")) s.pattern = pattern_from(field<std::string>(sj, "pattern", "trace step"));
    if (sj.contains("mode")) s.mode = mode_from(field<std::string>(sj, "mode", "trace step"));
    if (sj.contains("sites"))
      s.sites = field<std::vector<std::vector<std::string>>>(sj, "sites", "trace step");
    t.steps.push_back(std::move(s));
  }
  return t;
}

Json to_json(const ConstructionTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json sj;
    sj["op"] = s.op;
    if (!s.family.empty()) {
      sj["family"] = s.family;
      sj["parameter"] = s.parameter;
    }
    if (s.op == "extend") {
      sj["copies"] = s.copies;
      sj["axis"] = s.axis == Axis::x ? "x" : "y";
    }
    if (s.op == "unfold") sj["ell"] = s.ell;
    if (s.op == "spray") sj["pattern"] = s.pattern == SprayPattern::left ? "left" : "right";
    if (s.op == "search") sj["mode"] = to_string(s.mode);
    if (!s.sites.empty()) sj["sites"] = s.sites;
    steps.push_back(sj);
  }
  return Json{{"label", t.label}, {"steps", steps}};
}

namespace {

Json stats_json(const SearchStats& s) {
  return Json{{"nodes", s.nodes}, {"forced", s.forced}, {"failures", s.failures}};
}

Json assignment_json(const TotalAssignment& a) {
  return Json{{"vertex", color_array(a.vertex)}, {"edge", color_array(a.edge)}};
}

}  // namespace

Json to_json(const SearchReport& r, bool with_time) {
  Json j;
  j["graph"] = r.graph_key;
  j["mode"] = to_string(r.mode);
  j["verdict"] = to_string(r.verdict);
  if (r.certificate) j["certificate"] = assignment_json(*r.certificate);
  j["stats"] = stats_json(r.stats);
  if (with_time) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json to_json(const CountReport& r) {
  return Json{{"count", r.count}, {"verdict", to_string(r.verdict)}, {"stats", stats_json(r.stats)}};
}

Json to_json(const OrthogonalReport& r) {
  Json j = to_json(r.partner);
  if (r.base) j["base"] = assignment_json(*r.base);
  return j;
}

namespace {

Json entry_json(const HarnessEntry& e) {
  Json edges = Json::array();
  for (const auto& x : e.edges) edges.push_back(Json::array({x.u, x.v}));
  return Json{{"label", e.label}, {"n", e.n},          {"verdict", e.verdict}, {"note", e.note},
              {"nodes", e.nodes}, {"graph", e.graph_key}, {"edges", edges}};
}

}  // namespace

Json to_json(const HarnessReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back(entry_json(e));
  return Json{{"hypothesis", r.hypothesis},
              {"population", r.population},
              {"summary", to_string(r.summary)},
              {"notes", r.notes},
              {"entries", entries}};
}

std::string to_json_lines(const HarnessReport& r) {
  std::string out = Json{{"hypothesis", r.hypothesis}, {"population", r.population}}.dump() + "\n";
  for (const auto& e : r.entries) out += entry_json(e).dump() + "\n";
  out += Json{{"summary", to_string(r.summary)}, {"notes", r.notes}}.dump() + "\n";
  return out;
}

}  // namespace etc
