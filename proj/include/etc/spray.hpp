#pragma once

#include <array>
#include <optional>
#include <string>

#include "etc/assignment.hpp"
#include "etc/map.hpp"

namespace etc {

/// A 4-belt (a, b, c, d) in walk order and a partial assignment that colors
/// the belt rainbow and gives at least one belt vertex its full palette.
struct SpraySeed {
  std::array<VertexId, 4> belt{};
  TotalAssignment initial;
};

/// The two seed patterns: belt vertices 0,1,2,3; outer neighbors 2,3,0,1;
/// left belt edges 3,0,1,2 with spokes 1,2,3,0; right belt edges 2,3,0,1 with
/// spokes 3,0,1,2.
enum class SprayPattern { left, right };

/// Seeds `belt` (a face of m) with one of the two patterns. Throws if the
/// belt is not a 4-face or the outer neighbors clash.
SpraySeed algo_seed(const CombinatorialMap& m, const std::array<VertexId, 4>& belt, SprayPattern p);

enum class SprayStatus { complete, conflict, stalled };

struct SprayConflict {
  bool on_edge = false;
  int id = -1;       // VertexId or EdgeId
  std::string rule;  // "vertex", "neighborhood" or "belt"
};

struct SprayResult {
  SprayStatus status = SprayStatus::stalled;
  TotalAssignment assignment;
  std::optional<SprayConflict> conflict;
  long steps = 0;  // constraint evaluations
};

/// Forced closure under three rules, evaluated from a FIFO worklist:
///  vertex:        v and its three edges are pairwise distinct,
///  neighborhood:  v and its three neighbors are pairwise distinct,
///  belt:          colors repeat with period 4 along every face boundary
///                 and any four consecutive vertices (edges) are distinct.
/// Whenever three members of a distinct-quadruple are known the fourth is
/// forced. Throws on an invalid seed or a girth other than 4.
SprayResult spray_propagate(const CombinatorialMap& m, const SpraySeed& seed);

std::string to_string(SprayStatus s);

}  // namespace etc
