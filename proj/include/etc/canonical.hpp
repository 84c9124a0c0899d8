#pragma once

#include <compare>
#include <string>
#include <vector>

#include "etc/graph.hpp"

namespace etc {

/// Isomorphism-invariant certificate: the edge list under a canonical
/// relabeling. Two graphs are isomorphic iff their forms compare equal.
struct CanonicalForm {
  int n = 0;
  std::vector<Edge> edges;

  std::string key() const;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalResult {
  CanonicalForm form;
  std::vector<int> labeling;  // labeling[old] = canonical id
  long automorphisms_found = 0;
};

/// Partition refinement plus individualization, with automorphism pruning.
CanonicalResult canonical_labeling(const Graph& g);
inline CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() &&
         canonical_form(a) == canonical_form(b);
}

/// Connected simple cubic graphs on n vertices with girth exactly 4, one per
/// isomorphism class, in canonical-key order. Vertices are labelled
/// canonically.
std::vector<CubicGraph> enumerate_cubic_girth4(int n, std::size_t max_results = SIZE_MAX,
                                               int ceiling = 16);

}  // namespace etc
