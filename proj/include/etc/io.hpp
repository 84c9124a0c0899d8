#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etc/coloring.hpp"
#include "etc/cutout.hpp"
#include "etc/families.hpp"
#include "etc/harness.hpp"
#include "etc/search.hpp"
#include "etc/trace.hpp"
#include "json.hpp"

namespace etc {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Malformed or inconsistent input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Graph plus optional map, cutout drawing, named colorings and vertex names.
/// Edge-indexed data follows the sorted edge list of `graph`.
struct GraphDocument {
  Graph graph;
  std::optional<std::vector<std::vector<VertexId>>> rotation;  // neighbor order per vertex
  std::optional<Cutout> cutout;                                // rectangular kinds only
  std::map<std::string, TotalAssignment> assignments;
  std::map<std::string, VertexId> names;
  std::string family;
  int parameter = 0;
  std::vector<std::string> notes;
  std::vector<AlternatingPath> schedule;

  /// The map, when a rotation is present.
  std::optional<CombinatorialMap> map() const;
};

bool structurally_equal(const GraphDocument& a, const GraphDocument& b);

/// Primary coloring under "primary", orthogonal partner under "partner".
GraphDocument document_from(const NamedFamilyInstance& inst);

Json to_json(const GraphDocument& d);
/// Checks ids, colors, rotation and cutout consistency; throws ParseError.
GraphDocument document_from_json(const Json& j);
GraphDocument parse_document(const std::string& text);
std::string serialize(const GraphDocument& d);
/// Indented JSON with scalar arrays and arrays of scalar arrays on one line.
std::string format_json(const Json& j);

/// DOT with the color convention 0=hazel, 1=red, 2=blue, 3=green.
std::string to_dot(const GraphDocument& d, const std::string& assignment = "primary");
/// SVG of the cutout drawing; identified sides are dashed. Throws without a
/// cutout.
std::string to_svg(const GraphDocument& d, const std::string& assignment = "primary");
/// Hex color for a color index; uncolored is dark gray.
std::string color_hex(Color c);

ConstructionTrace trace_from_json(const Json& j);
Json to_json(const ConstructionTrace& t);

// Reports. Elapsed time is excluded unless asked for, so reports are
// byte-stable.
Json to_json(const SearchReport& r, bool with_time = false);
Json to_json(const CountReport& r);
Json to_json(const OrthogonalReport& r);
Json to_json(const HarnessReport& r);
/// One JSON object per line: a header, one line per entry, a summary line.
std::string to_json_lines(const HarnessReport& r);

}  // namespace etc
