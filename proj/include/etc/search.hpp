#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "etc/assignment.hpp"
#include "etc/graph.hpp"

namespace etc {

enum class SearchMode { etc, etgc };
enum class SearchVerdict { found, exhausted, timeout };

std::string to_string(SearchMode m);
std::string to_string(SearchVerdict v);

struct SearchOptions {
  /// Node ceiling; exceeding it yields SearchVerdict::timeout.
  std::int64_t max_nodes = 50'000'000;
  /// Fix the closed neighborhood of the root to colors 0,1,2,3. Ignored
  /// when a partial assignment is supplied.
  bool break_symmetry = true;
  /// Entries other than kUnset are imposed before the search starts.
  std::optional<TotalAssignment> fixed;
};

struct SearchStats {
  std::int64_t nodes = 0;
  std::int64_t forced = 0;     // values implied by propagation
  std::int64_t failures = 0;   // dead ends detected by propagation
};

struct SearchReport {
  std::string graph_key;  // canonical form key
  SearchMode mode = SearchMode::etc;
  SearchVerdict verdict = SearchVerdict::exhausted;
  std::optional<TotalAssignment> certificate;
  SearchStats stats;
  double elapsed_ms = 0;
};

/// Backtracking over vertices in BFS order from vertex 0, then edges, values
/// 0..3, with all-different propagation on every vertex star and closed
/// neighborhood (and every 4-cycle for ETGC) and color classes capped at
/// |V|/4. Throws unless g is cubic; ETGC mode also needs girth 4.
SearchReport find_etc(const Graph& g, SearchMode mode, const SearchOptions& opt = {});

struct CountReport {
  std::int64_t count = 0;
  SearchVerdict verdict = SearchVerdict::exhausted;  // exhausted or timeout
  SearchStats stats;
};

/// Exact number of solutions; with break_symmetry the count is up to color
/// permutation.
CountReport count_etcs(const Graph& g, SearchMode mode, const SearchOptions& opt = {});

/// Looks for an ETC sharing base's vertex colors with every edge color
/// changed. Without a base one is found first (ETC mode). The certificate is
/// the partner; `base` reports the coloring it pairs with.
struct OrthogonalReport {
  SearchReport partner;
  std::optional<TotalAssignment> base;
};
OrthogonalReport find_orthogonal_pair(const Graph& g, const std::optional<TotalAssignment>& base,
                                      const SearchOptions& opt = {});

}  // namespace etc
