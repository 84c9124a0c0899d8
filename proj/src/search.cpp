#include "etc/search.hpp"

#include <bit>
#include <chrono>
#include <deque>
#include <functional>

#include "etc/canonical.hpp"
#include "etc/coloring.hpp"

namespace etc {

std::string to_string(SearchMode m) { return m == SearchMode::etc ? "etc" : "etgc"; }

std::string to_string(SearchVerdict v) {
  switch (v) {
    case SearchVerdict::found: return "found";
    case SearchVerdict::exhausted: return "exhausted";
    case SearchVerdict::timeout: return "timeout";
  }
  return "?";
}

namespace {

using Domain = std::uint8_t;
constexpr Domain kAll = 0xF;

bool single(Domain d) { return d && !(d & (d - 1)); }
Color value_of(Domain d) { return std::countr_zero(static_cast<unsigned>(d)); }

// Variables: vertices 0..n-1, then edges n..n+m-1. Every constraint is an
// all-different group of at most four variables.
class Engine {
 public:
  enum class Step { keep_going, stop };
  using OnSolution = std::function<Step(const TotalAssignment&)>;

  Engine(const Graph& g, SearchMode mode, std::int64_t max_nodes)
      : g_(g), n_(g.order()), max_nodes_(max_nodes) {
    if (!g.is_cubic()) throw Error("search needs a cubic graph");
    if (mode == SearchMode::etgc && girth(g) != 4) throw Error("girth is not 4");
    const int vars = n_ + g.size();
    member_of_.resize(vars);
    for (VertexId v = 0; v < n_; ++v) {
      std::vector<int> star{v}, closed{v};
      for (EdgeId e : g.incident_edges(v)) star.push_back(n_ + e);
      for (VertexId w : g.neighbors(v)) closed.push_back(w);
      add_group(std::move(star));
      add_group(std::move(closed));
    }
    if (mode == SearchMode::etgc)
      for (const auto& c : girth_cycles(g)) {
        std::vector<int> vs, es;
        for (int i = 0; i < 4; ++i) {
          vs.push_back(c[i]);
          es.push_back(n_ + g.edge_id(c[i], c[(i + 1) % 4]));
        }
        add_group(std::move(vs));
        add_group(std::move(es));
      }
    cap_ = n_ / 4;
    order_ = branch_order();
  }

  // Narrows the root domains; returns false on an immediate contradiction.
  bool restrict(std::vector<Domain>& dom, int var, Domain allowed) const {
    dom[var] &= allowed;
    return dom[var] != 0;
  }

  std::vector<Domain> full_domains() const { return std::vector<Domain>(member_of_.size(), kAll); }

  SearchVerdict run(std::vector<Domain> dom, const OnSolution& on_solution) {
    std::deque<int> q;
    for (int x = 0; x < static_cast<int>(dom.size()); ++x) {
      if (!dom[x]) return SearchVerdict::exhausted;
      if (single(dom[x])) q.push_back(x);
    }
    for (int grp = 0; grp < static_cast<int>(groups_.size()); ++grp) group_queue_.push_back(grp);
    if (!propagate(dom, q)) return SearchVerdict::exhausted;
    const Outcome o = descend(dom, on_solution);
    return o == Outcome::timeout ? SearchVerdict::timeout
           : o == Outcome::stopped ? SearchVerdict::found
                                   : SearchVerdict::exhausted;
  }

  const SearchStats& stats() const { return stats_; }
  int vertex_count() const { return n_; }

 private:
  enum class Outcome { done, stopped, timeout };

  void add_group(std::vector<int> vars) {
    const int id = static_cast<int>(groups_.size());
    for (int x : vars) member_of_[x].push_back(id);
    groups_.push_back(std::move(vars));
  }

  // Vertices by BFS from vertex 0 (neighbors ascending), then each vertex's
  // incident edges in that order.
  std::vector<int> branch_order() const {
    std::vector<int> bfs{0};
    std::vector<char> seen(n_, 0);
    if (n_) seen[0] = 1;
    for (std::size_t i = 0; i < bfs.size(); ++i)
      for (VertexId w : g_.neighbors(bfs[i]))
        if (!seen[w]) seen[w] = 1, bfs.push_back(w);
    for (VertexId v = 0; v < n_; ++v)
      if (!seen[v]) bfs.push_back(v);
    std::vector<int> order(bfs.begin(), bfs.end());
    std::vector<char> edge_seen(g_.size(), 0);
    for (VertexId v : bfs)
      for (EdgeId e : g_.incident_edges(v))
        if (!edge_seen[e]) edge_seen[e] = 1, order.push_back(n_ + e);
    return order;
  }

  // Singleton values remove themselves from every peer; a group of four over
  // four colors places any color that fits only one member.
  bool propagate(std::vector<Domain>& dom, std::deque<int>& q) {
    for (;;) {
      while (!q.empty()) {
        const int x = q.front();
        q.pop_front();
        const Domain bit = dom[x];
        for (int grp : member_of_[x]) {
          group_queue_.push_back(grp);
          for (int y : groups_[grp]) {
            if (y == x || !(dom[y] & bit)) continue;
            dom[y] &= ~bit;
            if (!dom[y]) return fail();
            if (single(dom[y])) {
              ++stats_.forced;
              q.push_back(y);
            }
          }
        }
      }
      if (group_queue_.empty()) break;
      const int grp = group_queue_.front();
      group_queue_.pop_front();
      const auto& vars = groups_[grp];
      if (vars.size() != 4) continue;
      for (Color c = 0; c < kColors; ++c) {
        const Domain bit = Domain(1u << c);
        int holder = -1, holders = 0;
        for (int y : vars)
          if (dom[y] & bit) holder = y, ++holders;
        if (holders == 0) return fail();
        if (holders == 1 && dom[holder] != bit) {
          dom[holder] = bit;
          ++stats_.forced;
          q.push_back(holder);
        }
      }
    }
    int used[kColors] = {0, 0, 0, 0};
    for (VertexId v = 0; v < n_; ++v)
      if (single(dom[v]) && ++used[value_of(dom[v])] > cap_) return fail();
    return true;
  }

  bool fail() {
    ++stats_.failures;
    group_queue_.clear();
    return false;
  }

  Outcome descend(const std::vector<Domain>& dom, const OnSolution& on_solution) {
    int pick = -1;
    for (int x : order_)
      if (!single(dom[x])) {
        pick = x;
        break;
      }
    if (pick < 0) {
      TotalAssignment a(g_);
      for (VertexId v = 0; v < n_; ++v) a.vertex[v] = value_of(dom[v]);
      for (EdgeId e = 0; e < g_.size(); ++e) a.edge[e] = value_of(dom[n_ + e]);
      return on_solution(a) == Step::stop ? Outcome::stopped : Outcome::done;
    }
    for (Color c = 0; c < kColors; ++c) {
      const Domain bit = Domain(1u << c);
      if (!(dom[pick] & bit)) continue;
      if (++stats_.nodes > max_nodes_) return Outcome::timeout;
      std::vector<Domain> child = dom;
      child[pick] = bit;
      std::deque<int> q{pick};
      if (!propagate(child, q)) continue;
      const Outcome o = descend(child, on_solution);
      if (o != Outcome::done) return o;
    }
    return Outcome::done;
  }

  const Graph& g_;
  int n_;
  std::int64_t max_nodes_;
  int cap_ = 0;
  std::vector<std::vector<int>> groups_;
  std::vector<std::vector<int>> member_of_;
  std::vector<int> order_;
  std::deque<int> group_queue_;
  SearchStats stats_;
};

// Applies the fixed entries or the root-palette symmetry break.
bool seed_domains(const Engine& eng, const Graph& g, const SearchOptions& opt,
                  std::vector<Domain>& dom) {
  if (opt.fixed) {
    if (!opt.fixed->fits(g)) throw Error("assignment does not match the graph");
    const int n = g.order();
    for (VertexId v = 0; v < n; ++v)
      if (Color c = opt.fixed->vertex[v]; c != kUnset && !eng.restrict(dom, v, Domain(1u << c)))
        return false;
    for (EdgeId e = 0; e < g.size(); ++e)
      if (Color c = opt.fixed->edge[e]; c != kUnset && !eng.restrict(dom, n + e, Domain(1u << c)))
        return false;
    return true;
  }
  if (opt.break_symmetry && g.order() > 0) {
    eng.restrict(dom, 0, 1);
    Color c = 1;
    for (VertexId w : g.neighbors(0)) eng.restrict(dom, w, Domain(1u << c++));
  }
  return true;
}

double since_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

SearchReport find_etc(const Graph& g, SearchMode mode, const SearchOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  Engine eng(g, mode, opt.max_nodes);
  SearchReport r;
  r.graph_key = canonical_form(g).key();
  r.mode = mode;
  auto dom = eng.full_domains();
  if (seed_domains(eng, g, opt, dom)) {
    r.verdict = eng.run(std::move(dom), [&](const TotalAssignment& a) {
      r.certificate = a;
      return Engine::Step::stop;
    });
  }
  r.stats = eng.stats();
  r.elapsed_ms = since_ms(t0);
  if (r.certificate && !(mode == SearchMode::etc ? is_etc(g, *r.certificate) : is_etgc(g, *r.certificate)))
    throw Error("search produced an invalid certificate");
  return r;
}

CountReport count_etcs(const Graph& g, SearchMode mode, const SearchOptions& opt) {
  Engine eng(g, mode, opt.max_nodes);
  CountReport r;
  auto dom = eng.full_domains();
  if (seed_domains(eng, g, opt, dom)) {
    r.verdict = eng.run(std::move(dom), [&](const TotalAssignment&) {
      ++r.count;
      return Engine::Step::keep_going;
    });
  }
  r.stats = eng.stats();
  return r;
}

OrthogonalReport find_orthogonal_pair(const Graph& g, const std::optional<TotalAssignment>& base,
                                      const SearchOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  OrthogonalReport out;
  out.partner.graph_key = canonical_form(g).key();
  out.partner.mode = SearchMode::etc;
  SearchStats total;
  std::int64_t budget = opt.max_nodes;

  // Partner search for one base; nullopt on timeout.
  auto partner_of = [&](const TotalAssignment& a1) -> std::optional<SearchVerdict> {
    Engine eng(g, SearchMode::etc, budget);
    auto dom = eng.full_domains();
    const int n = g.order();
    for (VertexId v = 0; v < n; ++v) dom[v] = Domain(1u << a1.vertex[v]);
    for (EdgeId e = 0; e < g.size(); ++e) dom[n + e] = Domain(kAll & ~(1u << a1.edge[e]));
    const SearchVerdict v = eng.run(std::move(dom), [&](const TotalAssignment& a2) {
      out.partner.certificate = a2;
      return Engine::Step::stop;
    });
    total.nodes += eng.stats().nodes;
    total.forced += eng.stats().forced;
    total.failures += eng.stats().failures;
    budget -= eng.stats().nodes;
    return v;
  };

  if (base) {
    if (!is_etc(g, *base)) throw Error("base coloring is not an ETC");
    out.base = base;
    out.partner.verdict = *partner_of(*base);
  } else {
    Engine outer(g, SearchMode::etc, opt.max_nodes);
    auto dom = outer.full_domains();
    SearchOptions sym = opt;
    sym.fixed.reset();
    seed_domains(outer, g, sym, dom);
    bool any = false;
    SearchVerdict last = SearchVerdict::exhausted;
    const SearchVerdict v = outer.run(std::move(dom), [&](const TotalAssignment& a1) {
      any = true;
      last = *partner_of(a1);
      if (last == SearchVerdict::exhausted) return Engine::Step::keep_going;
      out.base = a1;
      return Engine::Step::stop;
    });
    total.nodes += outer.stats().nodes;
    total.forced += outer.stats().forced;
    total.failures += outer.stats().failures;
    if (v == SearchVerdict::exhausted && !any) throw Error("graph has no ETC");
    out.partner.verdict = last == SearchVerdict::found ? SearchVerdict::found
                          : v == SearchVerdict::timeout || last == SearchVerdict::timeout
                              ? SearchVerdict::timeout
                              : SearchVerdict::exhausted;
  }
  out.partner.stats = total;
  out.partner.elapsed_ms = since_ms(t0);
  if (out.partner.certificate && !are_orthogonal(g, *out.base, *out.partner.certificate))
    throw Error("search produced a non-orthogonal partner");
  return out;
}

}  // namespace etc
