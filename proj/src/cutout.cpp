#include "etc/cutout.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace etc {

std::string to_string(CutoutKind k) {
  switch (k) {
    case CutoutKind::plain: return "plain";
    case CutoutKind::xcutout: return "xcutout";
    case CutoutKind::ycutout: return "ycutout";
    case CutoutKind::bicutout: return "bicutout";
    case CutoutKind::zonogon: return "zonogon";
  }
  return "plain";
}

CutoutKind cutout_kind_from_string(const std::string& s) {
  for (auto k : {CutoutKind::plain, CutoutKind::xcutout, CutoutKind::ycutout, CutoutKind::bicutout,
                 CutoutKind::zonogon})
    if (to_string(k) == s) return k;
  throw Error("unknown cutout kind '" + s + "'");
}

namespace {

int floor_mod(int a, int m) { return ((a % m) + m) % m; }

long orient(Point a, Point b, Point c) {
  long v = static_cast<long>(b.x - a.x) * (c.y - a.y) - static_cast<long>(b.y - a.y) * (c.x - a.x);
  return (v > 0) - (v < 0);
}

bool on_segment(Point a, Point b, Point p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

struct Contact {
  enum Kind { none, point, bad } kind = none;
  Point at;
};

Contact contact(Point a1, Point a2, Point b1, Point b2) {
  long o1 = orient(a1, a2, b1), o2 = orient(a1, a2, b2), o3 = orient(b1, b2, a1),
       o4 = orient(b1, b2, a2);
  if (o1 * o2 < 0 && o3 * o4 < 0) return {Contact::bad, {}};
  if (o1 == 0 && o2 == 0) {
    // Collinear: project on the dominant axis.
    bool use_x = a1.x != a2.x || b1.x != b2.x;
    auto key = [&](Point p) { return use_x ? p.x : p.y; };
    int lo = std::max(std::min(key(a1), key(a2)), std::min(key(b1), key(b2)));
    int hi = std::min(std::max(key(a1), key(a2)), std::max(key(b1), key(b2)));
    if (lo > hi) return {};
    if (lo < hi) return {Contact::bad, {}};
    for (Point p : {a1, a2})
      if (key(p) == lo) return {Contact::point, p};
    return {Contact::bad, {}};
  }
  if (o1 == 0 && on_segment(a1, a2, b1)) return {Contact::point, b1};
  if (o2 == 0 && on_segment(a1, a2, b2)) return {Contact::point, b2};
  if (o3 == 0 && on_segment(b1, b2, a1)) return {Contact::point, a1};
  if (o4 == 0 && on_segment(b1, b2, a2)) return {Contact::point, a2};
  return {};
}

// Counterclockwise angular order of direction vectors starting from +x.
bool angle_less(Point a, Point b) {
  auto half = [](Point d) { return (d.y < 0 || (d.y == 0 && d.x < 0)) ? 1 : 0; };
  if (half(a) != half(b)) return half(a) < half(b);
  return static_cast<long>(a.x) * b.y - static_cast<long>(a.y) * b.x > 0;
}

struct Frame {
  int px = 0, py = 0, w = 0, h = 0;
  Point canon(Point p) const {
    Point q = p;
    if (px) q.x = floor_mod(p.x, px);
    if (py) q.y = floor_mod(p.y, py);
    return q;
  }
  bool inside(Point p) const { return p.x >= 0 && p.y >= 0 && p.x <= w && p.y <= h; }
};

Frame frame_of(const Cutout& c) {
  return Frame{c.identifies_x() ? c.width : 0, c.identifies_y() ? c.height : 0, c.width, c.height};
}

std::vector<Point> normalized(const Frame& f, const std::vector<Point>& path) {
  auto shift = [&](const std::vector<Point>& p) {
    Point c = f.canon(p.front());
    int dx = c.x - p.front().x, dy = c.y - p.front().y;
    std::vector<Point> out;
    for (Point q : p) out.push_back({q.x + dx, q.y + dy});
    return out;
  };
  auto a = shift(path);
  std::vector<Point> rev(path.rbegin(), path.rend());
  auto b = shift(rev);
  return std::min(a, b);
}

void check_boundary(const Cutout& c) {
  auto check_axis = [&](bool vertical_sides) {
    std::map<int, Color> lo, hi;
    for (const auto& v : c.vertices) {
      int along = vertical_sides ? v.at.y : v.at.x;
      int across = vertical_sides ? v.at.x : v.at.y;
      int max = vertical_sides ? c.width : c.height;
      if (across == 0) lo[along] = v.color;
      if (across == max) hi[along] = v.color;
    }
    if (lo != hi)
      throw Error(std::string("identification mismatch: ") + (vertical_sides ? "left/right" : "bottom/top") +
                  " boundary vertices do not pair");
  };
  if (c.identifies_x()) check_axis(true);
  if (c.identifies_y()) check_axis(false);
}

}  // namespace

Cutout grid_cutout(CutoutKind kind, const std::vector<std::string>& rows) {
  if (rows.empty() || rows.size() % 2 == 0) throw Error("grid needs an odd number of rows");
  auto tokens = [](const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> t;
    for (std::string x; in >> x;) t.push_back(x);
    return t;
  };
  auto color_of = [](const std::string& t) -> std::optional<Color> {
    if (t.size() == 1 && t[0] >= '0' && t[0] <= '3') return t[0] - '0';
    if (t == "-" || t == "|" || t == "o") return kUnset;
    if (t == "." || t == "_") return std::nullopt;
    throw Error("bad grid token '" + t + "'");
  };
  Cutout c;
  c.kind = kind;
  const int vrows = static_cast<int>(rows.size() + 1) / 2;
  c.height = vrows - 1;
  auto first = tokens(rows[0]);
  if (first.size() % 2 == 0) throw Error("vertex row needs an odd token count");
  c.width = static_cast<int>(first.size() / 2);
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    auto t = tokens(rows[r]);
    const int y = c.height - r / 2;
    if (r % 2 == 0) {
      if (static_cast<int>(t.size()) != 2 * c.width + 1)
        throw Error("vertex row " + std::to_string(r) + " has wrong width");
      for (int x = 0; x <= c.width; ++x) {
        if (auto col = color_of(t[2 * x])) c.vertices.push_back({{x, y}, *col});
        if (x < c.width)
          if (auto col = color_of(t[2 * x + 1])) c.edges.push_back({{{x, y}, {x + 1, y}}, *col});
      }
    } else {
      if (static_cast<int>(t.size()) != c.width + 1)
        throw Error("edge row " + std::to_string(r) + " has wrong width");
      for (int x = 0; x <= c.width; ++x)
        if (auto col = color_of(t[x])) c.edges.push_back({{{x, y}, {x, y - 1}}, *col});
    }
  }
  return c;
}

RealizedCutout realize(const Cutout& c) {
  if (c.kind == CutoutKind::zonogon) {
    if (!c.explicit_map) throw Error("zonogon cutout without map data");
    return *c.explicit_map;
  }
  const Frame f = frame_of(c);
  check_boundary(c);

  std::map<Point, int> id_of;
  std::vector<Point> position;
  std::vector<Color> vcolor;
  for (const auto& v : c.vertices) {
    if (!f.inside(v.at)) throw Error("vertex outside the cutout");
    Point p = f.canon(v.at);
    auto [it, fresh] = id_of.emplace(p, static_cast<int>(position.size()));
    if (fresh) {
      position.push_back(p);
      vcolor.push_back(v.color);
    } else if (vcolor[it->second] != v.color) {
      throw Error("identification mismatch: identified vertices carry different colors");
    }
  }

  struct Unique {
    std::vector<Point> path;
    Color color;
  };
  std::map<std::vector<Point>, int> edge_key;
  std::vector<Unique> unique;
  for (const auto& e : c.edges) {
    if (e.path.size() < 2) throw Error("edge path needs two points");
    auto key = normalized(f, e.path);
    auto [it, fresh] = edge_key.emplace(key, static_cast<int>(unique.size()));
    if (fresh)
      unique.push_back({e.path, e.color});
    else if (unique[it->second].color != e.color)
      throw Error("identification mismatch: identified edges carry different colors");
  }

  auto vertex_at = [&](Point p) {
    auto it = id_of.find(f.canon(p));
    if (it == id_of.end())
      throw Error("edge end (" + std::to_string(p.x) + "," + std::to_string(p.y) + ") is not a vertex");
    return it->second;
  };
  std::vector<Edge> es;
  for (const auto& u : unique) es.push_back({vertex_at(u.path.front()), vertex_at(u.path.back())});
  const int n = static_cast<int>(position.size());
  Graph g(n, es);
  if (g.size() != static_cast<int>(unique.size())) throw Error("not simple");

  // Crossing test over the translates that can meet the fundamental domain.
  struct Seg {
    Point a, b;
    int edge, index;
  };
  std::vector<Seg> segs;
  for (int i = 0; i < static_cast<int>(unique.size()); ++i)
    for (std::size_t k = 0; k + 1 < unique[i].path.size(); ++k)
      segs.push_back({unique[i].path[k], unique[i].path[k + 1], i, static_cast<int>(k)});
  std::vector<int> shifts_x{0}, shifts_y{0};
  if (f.px) shifts_x = {-f.px, 0, f.px};
  if (f.py) shifts_y = {-f.py, 0, f.py};
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i; j < segs.size(); ++j)
      for (int sx : shifts_x)
        for (int sy : shifts_y) {
          if (i == j && sx == 0 && sy == 0) continue;
          Point b1{segs[j].a.x + sx, segs[j].a.y + sy}, b2{segs[j].b.x + sx, segs[j].b.y + sy};
          auto ct = contact(segs[i].a, segs[i].b, b1, b2);
          if (ct.kind == Contact::none) continue;
          bool ok = false;
          if (ct.kind == Contact::point) {
            bool end_a = ct.at == segs[i].a || ct.at == segs[i].b;
            bool end_b = ct.at == b1 || ct.at == b2;
            bool joint = segs[i].edge == segs[j].edge && sx == 0 && sy == 0 &&
                         std::abs(segs[i].index - segs[j].index) == 1;
            ok = end_a && end_b && (joint || id_of.count(f.canon(ct.at)));
          }
          if (!ok) throw Error("edge interiors cross in the cutout");
        }

  // Rotation: outgoing directions sorted counterclockwise.
  std::vector<std::vector<std::pair<Point, Dart>>> out(n);
  std::vector<Color> ecolor(g.size(), kUnset);
  for (const auto& u : unique) {
    int a = vertex_at(u.path.front()), b = vertex_at(u.path.back());
    EdgeId e = g.edge_id(a, b);
    ecolor[e] = u.color;
    const auto& p = u.path;
    Point da{p[1].x - p[0].x, p[1].y - p[0].y};
    Point db{p[p.size() - 2].x - p.back().x, p[p.size() - 2].y - p.back().y};
    Dart from_a = g.edge(e).u == a ? 2 * e : 2 * e + 1;
    out[a].push_back({da, from_a});
    out[b].push_back({db, reverse(from_a)});
  }
  RotationSystem rot;
  rot.order.resize(n);
  for (int v = 0; v < n; ++v) {
    std::sort(out[v].begin(), out[v].end(),
              [](const auto& x, const auto& y) { return angle_less(x.first, y.first); });
    for (std::size_t i = 0; i + 1 < out[v].size(); ++i)
      if (!angle_less(out[v][i].first, out[v][i + 1].first))
        throw Error("two edges leave vertex " + std::to_string(v) + " in the same direction");
    for (auto& [d, dart] : out[v]) rot.order[v].push_back(dart);
  }

  RealizedCutout r{CombinatorialMap(std::move(g), std::move(rot)), {}, std::move(position)};
  r.colors = TotalAssignment(r.map.graph());
  r.colors.vertex = std::move(vcolor);
  r.colors.edge = std::move(ecolor);
  return r;
}

Cutout reinterpret(const Cutout& c, Axis keep) {
  if (c.kind != CutoutKind::bicutout) throw Error("reinterpret needs a bicutout");
  Cutout r = c;
  r.kind = keep == Axis::x ? CutoutKind::xcutout : CutoutKind::ycutout;
  // An edge crossing the dropped side is cut into two pendant stubs, which
  // resolve_stubs would delete anyway, so it is dropped here.
  std::erase_if(r.edges, [&](const CutoutEdge& e) {
    return std::any_of(e.path.begin(), e.path.end(), [&](Point p) {
      return keep == Axis::x ? (p.y < 0 || p.y > c.height) : (p.x < 0 || p.x > c.width);
    });
  });
  return r;
}

std::pair<int, std::vector<Edge>> resolve_stubs(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> es(g.edges());
  std::vector<char> edge_alive(es.size(), 1), alive(n, 1);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::vector<int>> inc(n);
    for (int i = 0; i < static_cast<int>(es.size()); ++i)
      if (edge_alive[i]) {
        if (es[i].u == es[i].v) {
          edge_alive[i] = 0;
          changed = true;
          continue;
        }
        inc[es[i].u].push_back(i);
        inc[es[i].v].push_back(i);
      }
    if (changed) continue;
    for (int v = 0; v < n && !changed; ++v) {
      if (!alive[v]) continue;
      if (inc[v].size() <= 1) {
        alive[v] = 0;
        for (int i : inc[v]) edge_alive[i] = 0;
        changed = true;
      } else if (inc[v].size() == 2) {
        auto end = [&](int i) { return es[i].u == v ? es[i].v : es[i].u; };
        int a = end(inc[v][0]), b = end(inc[v][1]);
        edge_alive[inc[v][1]] = 0;
        es[inc[v][0]] = {a, b};
        alive[v] = 0;
        changed = true;
      }
    }
  }
  std::vector<int> id(n, -1);
  int m = 0;
  for (int v = 0; v < n; ++v)
    if (alive[v]) id[v] = m++;
  std::vector<Edge> out;
  for (int i = 0; i < static_cast<int>(es.size()); ++i)
    if (edge_alive[i]) out.push_back({id[es[i].u], id[es[i].v]});
  return {m, out};
}

bool is_toroidally_3_edge_connected(const Cutout& c) {
  for (Axis keep : {Axis::x, Axis::y}) {
    auto r = realize(reinterpret(c, keep));
    auto [n, es] = resolve_stubs(r.map.graph());
    if (n >= 2 && edge_connectivity(n, es) >= 3) return true;
  }
  return false;
}

Cutout extend(const Cutout& c, int copies, Axis axis) {
  if (copies < 2) throw Error("extension needs at least two copies");
  if (c.kind == CutoutKind::zonogon) throw Error("zonogon cutouts cannot be extended");
  const bool along_x = axis == Axis::x;
  const int span = along_x ? c.width : c.height;
  if (span <= 0) throw Error("degenerate cutout");
  // Border listings must agree under translation by one span.
  auto border = [&](int at) {
    std::set<std::tuple<int, int, Color>> marks;
    for (const auto& v : c.vertices)
      if ((along_x ? v.at.x : v.at.y) == at) marks.insert({0, along_x ? v.at.y : v.at.x, v.color});
    for (const auto& e : c.edges) {
      bool on = std::all_of(e.path.begin(), e.path.end(),
                            [&](Point p) { return (along_x ? p.x : p.y) == at; });
      if (on) {
        int lo = std::min(along_x ? e.path.front().y : e.path.front().x,
                          along_x ? e.path.back().y : e.path.back().x);
        marks.insert({1, lo, e.color});
      }
    }
    return marks;
  };
  if (border(0) != border(span)) throw Error("border mismatch: opposite borders differ");

  Cutout r;
  r.kind = c.kind;
  r.width = along_x ? c.width * copies : c.width;
  r.height = along_x ? c.height : c.height * copies;
  std::map<Point, Color> seen_vertex;
  std::set<std::vector<Point>> seen_edge;
  for (int k = 0; k < copies; ++k) {
    const int dx = along_x ? k * span : 0, dy = along_x ? 0 : k * span;
    for (const auto& v : c.vertices) {
      Point p{v.at.x + dx, v.at.y + dy};
      if (seen_vertex.emplace(p, v.color).second) r.vertices.push_back({p, v.color});
    }
    for (const auto& e : c.edges) {
      CutoutEdge t{{}, e.color};
      for (Point p : e.path) t.path.push_back({p.x + dx, p.y + dy});
      auto key = t.path;
      if (key.back() < key.front()) std::reverse(key.begin(), key.end());
      if (seen_edge.insert(key).second) r.edges.push_back(std::move(t));
    }
  }
  return r;
}

Cutout zonogon_cutout(RealizedCutout m, std::vector<std::vector<Dart>> side_pairs) {
  Cutout c;
  c.kind = CutoutKind::zonogon;
  c.explicit_map = std::move(m);
  c.side_pairs = std::move(side_pairs);
  return c;
}

}  // namespace etc
