#include <algorithm>
#include <map>

#include "etc/canonical.hpp"

namespace etc {

namespace {

// Builds labelled cubic graphs whose labelling is a breadth-first order from
// vertex 0: vertex i fills its free stubs with already-labelled vertices
// j > i (ascending) or with the next fresh label. Every connected cubic graph
// with no triangle has at least one such labelling.
class BfsGenerator {
 public:
  BfsGenerator(int n, std::size_t max_results)
      : n_(n), max_results_(max_results), adj_(n), deg_(n, 0) {}

  std::vector<CubicGraph> run() {
    next_label_ = 1;
    fill(0, -1);
    std::vector<CubicGraph> out;
    for (auto& [key, g] : found_) out.push_back(std::move(g));
    return out;
  }

 private:
  bool common_neighbor(int a, int b) const {
    for (int i = 0; i < deg_[a]; ++i)
      for (int j = 0; j < deg_[b]; ++j)
        if (adj_[a][i] == adj_[b][j]) return true;
    return false;
  }
  bool adjacent(int a, int b) const {
    for (int i = 0; i < deg_[a]; ++i)
      if (adj_[a][i] == b) return true;
    return false;
  }
  void link(int a, int b) {
    adj_[a][deg_[a]++] = b;
    adj_[b][deg_[b]++] = a;
  }
  void unlink(int a, int b) {
    --deg_[a];
    --deg_[b];
  }

  bool done() const { return found_.size() >= max_results_; }

  // `last` is the largest existing vertex attached to i during this round.
  void fill(int i, int last) {
    if (done()) return;
    if (i == n_) {
      if (next_label_ == n_) emit();
      return;
    }
    if (i >= next_label_) return;  // disconnected
    if (deg_[i] == 3) {
      fill(i + 1, -1);
      return;
    }
    for (int j = std::max(last + 1, i + 1); j < next_label_; ++j) {
      if (deg_[j] >= 3 || adjacent(i, j) || common_neighbor(i, j)) continue;
      link(i, j);
      fill(i, j);
      unlink(i, j);
      if (done()) return;
    }
    if (next_label_ < n_) {
      const int j = next_label_++;
      link(i, j);
      fill(i, j);
      unlink(i, j);
      --next_label_;
    }
  }

  void emit() {
    std::vector<Edge> es;
    for (int v = 0; v < n_; ++v)
      for (int k = 0; k < 3; ++k)
        if (v < adj_[v][k]) es.push_back({v, adj_[v][k]});
    Graph g(n_, std::move(es));
    if (girth(g) != 4) return;
    // Cheap invariant gate: only labellings rooted at a vertex with the
    // minimum local 4-cycle profile reach the canonical-form step.
    auto profile = local_profiles(g);
    if (profile[0] != *std::min_element(profile.begin(), profile.end())) return;
    auto canon = canonical_labeling(g);
    auto key = canon.form.key();
    if (found_.count(key)) return;
    found_.emplace(std::move(key), CubicGraph(relabel(g, canon.labeling)));
  }

  static std::vector<std::vector<int>> local_profiles(const Graph& g) {
    std::vector<int> c4(g.order(), 0);
    for (const auto& cyc : girth_cycles(g))
      for (int v : cyc) ++c4[v];
    std::vector<std::vector<int>> prof(g.order());
    for (int v = 0; v < g.order(); ++v) {
      std::vector<int> nb;
      for (int w : g.neighbors(v)) nb.push_back(c4[w]);
      std::sort(nb.begin(), nb.end());
      prof[v].push_back(c4[v]);
      prof[v].insert(prof[v].end(), nb.begin(), nb.end());
    }
    return prof;
  }

  int n_;
  std::size_t max_results_;
  std::vector<std::array<int, 3>> adj_;
  std::vector<int> deg_;
  int next_label_ = 1;
  std::map<std::string, CubicGraph> found_;
};

}  // namespace

std::vector<CubicGraph> enumerate_cubic_girth4(int n, std::size_t max_results, int ceiling) {
  if (n % 2 != 0) throw Error("no cubic graph has odd order " + std::to_string(n));
  if (n < 4) throw Error("order must be at least 4");
  if (n > ceiling)
    throw Error("order " + std::to_string(n) + " exceeds enumeration ceiling " +
                std::to_string(ceiling));
  if (n == 4) return {};
  return BfsGenerator(n, max_results).run();
}

}  // namespace etc
