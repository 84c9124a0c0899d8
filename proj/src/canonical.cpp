#include "etc/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace etc {

std::string CanonicalForm::key() const {
  std::string s = std::to_string(n) + ":";
  for (const auto& e : edges) {
    s += std::to_string(e.u);
    s += '-';
    s += std::to_string(e.v);
    s += ',';
  }
  return s;
}

namespace {

using Cells = std::vector<std::vector<int>>;

// Equitable refinement. Cells are split by the count of neighbors in every
// cell; sub-cells are ordered by that signature so the result only depends on
// the isomorphism class of (graph, ordered partition).
void refine(const Graph& g, Cells& cells) {
  const int n = g.order();
  std::vector<int> cell_of(n);
  for (;;) {
    for (int c = 0; c < static_cast<int>(cells.size()); ++c)
      for (int v : cells[c]) cell_of[v] = c;
    const int k = static_cast<int>(cells.size());
    Cells next;
    next.reserve(cells.size());
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> sig;
      sig.reserve(cell.size());
      for (int v : cell) {
        std::vector<int> counts(k, 0);
        for (int w : g.neighbors(v)) ++counts[cell_of[w]];
        sig.push_back({std::move(counts), v});
      }
      std::sort(sig.begin(), sig.end());
      std::size_t i = 0;
      while (i < sig.size()) {
        std::size_t j = i;
        std::vector<int> part;
        while (j < sig.size() && sig[j].first == sig[i].first) part.push_back(sig[j++].second);
        std::sort(part.begin(), part.end());
        next.push_back(std::move(part));
        i = j;
      }
    }
    const bool split = next.size() != cells.size();
    cells = std::move(next);
    if (!split) return;
  }
}

struct Search {
  const Graph& g;
  std::vector<Edge> best_cert;
  std::vector<int> best_perm;
  bool have_best = false;
  std::vector<std::vector<int>> autos;

  std::vector<Edge> certificate(const std::vector<int>& perm) const {
    std::vector<Edge> es;
    es.reserve(g.size());
    for (const auto& e : g.edges()) {
      int a = perm[e.u], b = perm[e.v];
      if (a > b) std::swap(a, b);
      es.push_back({a, b});
    }
    std::sort(es.begin(), es.end());
    return es;
  }

  void leaf(const Cells& cells) {
    std::vector<int> perm(g.order());
    for (int i = 0; i < static_cast<int>(cells.size()); ++i) perm[cells[i][0]] = i;
    auto cert = certificate(perm);
    if (!have_best || cert < best_cert) {
      best_cert = std::move(cert);
      best_perm = std::move(perm);
      have_best = true;
    } else if (cert == best_cert) {
      // best_perm^-1 o perm is an automorphism.
      std::vector<int> inv(g.order());
      for (int v = 0; v < g.order(); ++v) inv[best_perm[v]] = v;
      std::vector<int> a(g.order());
      for (int v = 0; v < g.order(); ++v) a[v] = inv[perm[v]];
      bool identity = true;
      for (int v = 0; v < g.order(); ++v) identity &= a[v] == v;
      if (!identity) autos.push_back(std::move(a));
    }
  }

  // Orbit representative of each vertex under the automorphisms that fix
  // every vertex of `prefix`.
  std::vector<int> orbits(const std::vector<int>& prefix) const {
    std::vector<int> parent(g.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& a : autos) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return a[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < g.order(); ++v) {
        int x = find(v), y = find(a[v]);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    }
    for (int v = 0; v < g.order(); ++v) parent[v] = find(v);
    return parent;
  }

  void dfs(Cells cells, std::vector<int>& prefix) {
    refine(g, cells);
    int target = -1;
    for (int i = 0; i < static_cast<int>(cells.size()); ++i)
      if (cells[i].size() > 1 && (target < 0 || cells[i].size() < cells[target].size())) target = i;
    if (target < 0) {
      leaf(cells);
      return;
    }
    std::vector<int> tried;
    const auto members = cells[target];
    for (int v : members) {
      if (!tried.empty()) {
        auto orb = orbits(prefix);
        bool same = std::any_of(tried.begin(), tried.end(), [&](int w) { return orb[w] == orb[v]; });
        if (same) continue;
      }
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : cells[i])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      prefix.push_back(v);
      dfs(std::move(child), prefix);
      prefix.pop_back();
    }
  }
};

}  // namespace

CanonicalResult canonical_labeling(const Graph& g) {
  CanonicalResult r;
  r.form.n = g.order();
  if (g.order() == 0) return r;
  Search s{g, {}, {}, false, {}};
  // Initial partition by degree keeps the search invariant for any graph.
  std::map<int, std::vector<int>> by_degree;
  for (int v = 0; v < g.order(); ++v) by_degree[g.degree(v)].push_back(v);
  Cells cells;
  for (auto& [d, vs] : by_degree) cells.push_back(std::move(vs));
  std::vector<int> prefix;
  s.dfs(std::move(cells), prefix);
  r.form.edges = std::move(s.best_cert);
  r.labeling = std::move(s.best_perm);
  r.automorphisms_found = static_cast<long>(s.autos.size());
  return r;
}

}  // namespace etc
