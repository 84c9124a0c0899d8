#include "etc/spray.hpp"

#include <deque>
#include <set>

namespace etc {

std::string to_string(SprayStatus s) {
  switch (s) {
    case SprayStatus::complete: return "complete";
    case SprayStatus::conflict: return "conflict";
    case SprayStatus::stalled: return "stalled";
  }
  return "stalled";
}

namespace {

// Index of a 4-face matching the cyclic vertex sequence in either direction.
bool is_four_face(const CombinatorialMap& m, const std::array<VertexId, 4>& belt) {
  for (const auto& b : trace_belts(m)) {
    if (b.length() != 4) continue;
    for (int s = 0; s < 4; ++s)
      for (int dir : {1, -1}) {
        bool same = true;
        for (int i = 0; i < 4 && same; ++i) same = b.vertices[(s + dir * i + 8) % 4] == belt[i];
        if (same) return true;
      }
  }
  return false;
}

VertexId outer_neighbor(const Graph& g, const std::array<VertexId, 4>& belt, int i) {
  for (VertexId w : g.neighbors(belt[i]))
    if (w != belt[(i + 1) % 4] && w != belt[(i + 3) % 4]) return w;
  throw Error("belt vertex without an outer neighbor");
}

class Propagator {
 public:
  Propagator(const CombinatorialMap& m, const TotalAssignment& init) : g_(m.graph()) {
    n_ = g_.order();
    color_.assign(n_ + g_.size(), kUnset);
    for (int v = 0; v < n_; ++v) color_[v] = init.vertex[v];
    for (int e = 0; e < g_.size(); ++e) color_[n_ + e] = init.edge[e];

    for (VertexId v = 0; v < n_; ++v) {
      Constraint c{Kind::vertex, {v}};
      for (EdgeId e : g_.incident_edges(v)) c.elems.push_back(n_ + e);
      add(std::move(c));
    }
    for (VertexId v = 0; v < n_; ++v) {
      Constraint c{Kind::neighborhood, {v}};
      for (VertexId w : g_.neighbors(v)) c.elems.push_back(w);
      add(std::move(c));
    }
    for (const auto& b : trace_belts(m)) {
      Constraint c{Kind::belt, {}};
      for (VertexId v : b.vertices) c.elems.push_back(v);
      for (EdgeId e : b.edges) c.elems.push_back(n_ + e);
      add(std::move(c));
    }
  }

  SprayResult run() {
    for (int i = 0; i < static_cast<int>(cons_.size()); ++i) push(i);
    SprayResult r;
    while (!queue_.empty() && !conflict_) {
      int i = queue_.front();
      queue_.pop_front();
      queued_[i] = 0;
      ++r.steps;
      evaluate(cons_[i]);
    }
    r.assignment = TotalAssignment(g_);
    for (int v = 0; v < n_; ++v) r.assignment.vertex[v] = color_[v];
    for (int e = 0; e < g_.size(); ++e) r.assignment.edge[e] = color_[n_ + e];
    if (conflict_) {
      r.status = SprayStatus::conflict;
      r.conflict = conflict_;
    } else {
      r.status = r.assignment.complete() ? SprayStatus::complete : SprayStatus::stalled;
    }
    return r;
  }

 private:
  enum class Kind { vertex, neighborhood, belt };
  struct Constraint {
    Kind kind;
    std::vector<int> elems;
  };

  void add(Constraint c) {
    const int id = static_cast<int>(cons_.size());
    std::set<int> seen(c.elems.begin(), c.elems.end());
    if (watch_.empty()) watch_.resize(color_.size());
    for (int x : seen) watch_[x].push_back(id);
    cons_.push_back(std::move(c));
    queued_.push_back(0);
  }

  void push(int i) {
    if (queued_[i]) return;
    queued_[i] = 1;
    queue_.push_back(i);
  }

  static const char* name(Kind k) {
    switch (k) {
      case Kind::vertex: return "vertex";
      case Kind::neighborhood: return "neighborhood";
      case Kind::belt: return "belt";
    }
    return "";
  }

  void fail(int elem, Kind k) {
    if (conflict_) return;
    conflict_ = SprayConflict{elem >= n_, elem >= n_ ? elem - n_ : elem, name(k)};
  }

  void assign(int elem, Color c, Kind k) {
    if (conflict_) return;
    if (color_[elem] == c) return;
    if (color_[elem] != kUnset) return fail(elem, k);
    color_[elem] = c;
    for (int i : watch_[elem]) push(i);
  }

  // Pairwise distinct quadruple; three known force the fourth.
  void quadruple(const std::array<int, 4>& q, Kind k) {
    unsigned seen = 0;
    int missing = -1, unknown = 0;
    for (int x : q) {
      Color c = color_[x];
      if (c == kUnset) {
        missing = x;
        ++unknown;
        continue;
      }
      if (seen & (1u << c)) return fail(x, k);
      seen |= 1u << c;
    }
    if (unknown == 1)
      for (Color c = 0; c < kColors; ++c)
        if (!(seen & (1u << c))) return assign(missing, c, k);
  }

  void evaluate(const Constraint& c) {
    if (c.kind != Kind::belt) {
      if (c.elems.size() == 4) quadruple({c.elems[0], c.elems[1], c.elems[2], c.elems[3]}, c.kind);
      return;
    }
    const int len = static_cast<int>(c.elems.size()) / 2;
    for (int part = 0; part < 2 && !conflict_; ++part) {
      const int* seq = c.elems.data() + part * len;
      for (int i = 0; i < len && !conflict_; ++i) {
        int a = seq[i], b = seq[(i + 4) % len];
        if (color_[a] != kUnset) assign(b, color_[a], c.kind);
        else if (color_[b] != kUnset) assign(a, color_[b], c.kind);
      }
      for (int i = 0; i < len && !conflict_; ++i) {
        std::array<int, 4> w{seq[i], seq[(i + 1) % len], seq[(i + 2) % len], seq[(i + 3) % len]};
        if (std::set<int>(w.begin(), w.end()).size() == 4) quadruple(w, c.kind);
      }
    }
  }

  const Graph& g_;
  int n_ = 0;
  std::vector<Color> color_;
  std::vector<Constraint> cons_;
  std::vector<std::vector<int>> watch_;
  std::vector<char> queued_;
  std::deque<int> queue_;
  std::optional<SprayConflict> conflict_;
};

void validate_seed(const CombinatorialMap& m, const SpraySeed& s) {
  const Graph& g = m.graph();
  if (!s.initial.fits(g)) throw Error("invalid seed: assignment does not match the map");
  for (Color c : s.initial.vertex)
    if (c < kUnset || c >= kColors) throw Error("invalid seed: color out of range");
  for (Color c : s.initial.edge)
    if (c < kUnset || c >= kColors) throw Error("invalid seed: color out of range");
  for (VertexId v : s.belt)
    if (v < 0 || v >= g.order()) throw Error("invalid seed: belt vertex out of range");
  if (!is_four_face(m, s.belt)) throw Error("invalid seed: belt is not a 4-face of the map");
  unsigned vs = 0, es = 0;
  for (int i = 0; i < 4; ++i) {
    Color cv = s.initial.vertex[s.belt[i]];
    Color ce = s.initial.edge[g.edge_id(s.belt[i], s.belt[(i + 1) % 4])];
    if (cv == kUnset || ce == kUnset) throw Error("invalid seed: belt not fully colored");
    vs |= 1u << cv;
    es |= 1u << ce;
  }
  if (vs != 0xF || es != 0xF) throw Error("invalid seed: belt not rainbow");
  bool palette = false;
  for (VertexId v : s.belt) {
    unsigned p = 1u << s.initial.vertex[v];
    bool full = true;
    for (EdgeId e : g.incident_edges(v)) {
      if (s.initial.edge[e] == kUnset) full = false;
      else p |= 1u << s.initial.edge[e];
    }
    palette = palette || (full && p == 0xF);
  }
  if (!palette) throw Error("invalid seed: no belt vertex has its full palette");
}

}  // namespace

SpraySeed algo_seed(const CombinatorialMap& m, const std::array<VertexId, 4>& belt, SprayPattern p) {
  const Graph& g = m.graph();
  if (!is_four_face(m, belt)) throw Error("seed belt is not a 4-face of the map");
  static constexpr std::array<Color, 4> kVertex{0, 1, 2, 3}, kOuter{2, 3, 0, 1};
  static constexpr std::array<Color, 4> kLeftBelt{3, 0, 1, 2}, kLeftSpoke{1, 2, 3, 0};
  static constexpr std::array<Color, 4> kRightBelt{2, 3, 0, 1}, kRightSpoke{3, 0, 1, 2};
  const auto& be = p == SprayPattern::left ? kLeftBelt : kRightBelt;
  const auto& sp = p == SprayPattern::left ? kLeftSpoke : kRightSpoke;
  SpraySeed s{belt, TotalAssignment(g)};
  for (int i = 0; i < 4; ++i) {
    s.initial.vertex[belt[i]] = kVertex[i];
    s.initial.edge[g.edge_id(belt[i], belt[(i + 1) % 4])] = be[i];
  }
  for (int i = 0; i < 4; ++i) {
    VertexId w = outer_neighbor(g, belt, i);
    Color& c = s.initial.vertex[w];
    if (c != kUnset && c != kOuter[i]) throw Error("seed outer neighbors clash");
    c = kOuter[i];
    s.initial.edge[g.edge_id(belt[i], w)] = sp[i];
  }
  return s;
}

SprayResult spray_propagate(const CombinatorialMap& m, const SpraySeed& seed) {
  if (girth(m.graph()) != 4) throw Error("spray needs girth 4");
  validate_seed(m, seed);
  return Propagator(m, seed.initial).run();
}

}  // namespace etc
