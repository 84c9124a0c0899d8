#pragma once

#include <string>
#include <vector>

#include "etc/families.hpp"
#include "etc/search.hpp"
#include "etc/spray.hpp"

namespace etc {

/// One replayable operation. Vertex references are names of the current
/// instance; which fields matter depends on `op`:
///   start        family, parameter
///   extend       copies, axis (needs a cutout)
///   unfold       sites[0] = 4-face a,b,c,d; ell (needs a map)
///   exchange     sites[0] = v0,v1,v2,v3 (needs a complete coloring)
///   union        family, parameter; names become "L"+old and "R"+new
///   self_amalgam sites[0], sites[1] = the two glued 4-cycles
///   amalgam      family, parameter; sites[0] here, sites[1] in the new copy
///   spray        sites[0] = seeded 4-face; pattern (needs a map)
///   search       mode
struct TraceStep {
  std::string op;
  std::string family;
  int parameter = 0;
  int copies = 0;
  Axis axis = Axis::x;
  int ell = 0;
  SprayPattern pattern = SprayPattern::left;
  SearchMode mode = SearchMode::etgc;
  std::vector<std::vector<std::string>> sites;
};

struct ConstructionTrace {
  std::string label;
  std::vector<TraceStep> steps;
};

/// Raised by replay; names the failing step.
class TraceError : public Error {
 public:
  TraceError(int step, const std::string& op, const std::string& what)
      : Error("step " + std::to_string(step) + " (" + op + "): " + what), step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

/// Families and display fixtures addressable by name: q3, prism, tess,
/// tess-right, gamma, godd, oct3, te, octaedro-left, octaedro-middle,
/// klein, klein-diagonal, two-cube-exchange.
NamedFamilyInstance construct_family(const std::string& family, int parameter);

/// Runs the steps in order. After every step the graph must be simple, cubic
/// and of girth 4, and a complete coloring must be an ETC (an ETGC after
/// spray, search and exchange).
NamedFamilyInstance replay(const ConstructionTrace& t);

/// Built-in traces reproducing the reference constructions.
std::vector<ConstructionTrace> builtin_traces();

}  // namespace etc
