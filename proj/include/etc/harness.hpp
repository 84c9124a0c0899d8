#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etc/cutout.hpp"
#include "etc/map.hpp"
#include "etc/search.hpp"
#include "etc/trace.hpp"

namespace etc {

enum class HarnessSummary { consistent, counterexample, flagged, inconclusive };
std::string to_string(HarnessSummary s);

/// One examined graph. `edges` makes every entry replayable on its own.
struct HarnessEntry {
  std::string label;
  int n = 0;
  std::string graph_key;
  std::vector<Edge> edges;
  std::string verdict;
  std::string note;
  std::int64_t nodes = 0;
};

struct HarnessReport {
  std::string hypothesis;  // theorem-fo, toroid-conjecture, con1-closure, alfin-minimality
  std::string population;
  std::vector<HarnessEntry> entries;
  HarnessSummary summary = HarnessSummary::consistent;
  std::vector<std::string> notes;
};

struct HarnessOptions {
  int workers = 1;                      // verdicts do not depend on this
  std::int64_t max_nodes = 50'000'000;  // per search
};

/// A claimed ETC, optionally with a map whose belts it constrains.
struct CertificateClaim {
  std::string label;
  Graph graph;
  TotalAssignment assignment;
  std::optional<CombinatorialMap> map;
};

/// Enumerated cubic girth-4 graphs with |V| <= n_max: |V| not divisible by 4
/// must have no ETC. Claims must validate, have |V| divisible by 4 and, with
/// a map, only belts of length divisible by 4.
HarnessReport harness_theorem_fo(int n_max, const std::vector<CertificateClaim>& claims,
                                 const HarnessOptions& opt = {});
/// Reference colorings of the families, with their maps.
std::vector<CertificateClaim> default_certificate_claims();

struct ToroidFixture {
  std::string label;
  Cutout cutout;  // bicutout, or a genus-1 zonogon (connectivity not evaluable)
};

/// Fixtures with all belts divisible by 4 that pass the toroidal
/// 3-edge-connectivity test form the population; each is searched for an
/// ETGC and an exhausted search is a counterexample. Excluded fixtures are
/// searched too and their verdicts recorded.
HarnessReport harness_toroid_conjecture(const std::vector<ToroidFixture>& fixtures,
                                        const HarnessOptions& opt = {});
std::vector<ToroidFixture> default_toroid_fixtures();

/// Replays the traces and lists which ETC-admitting enumerated graphs with
/// |V| <= n_max their results reach. Unreached graphs are listed, not judged.
HarnessReport harness_con1(const std::vector<ConstructionTrace>& traces, int n_max,
                           const HarnessOptions& opt = {});

struct GenusFixture {
  std::string label;
  CombinatorialMap map;
};

/// Smallest |V| among ETGC-admitting graphs carrying a map of Euler genus g:
/// the fixtures, plus enumerated graphs with |V| <= n_max whose rotation
/// systems are searched exhaustively (n_max <= 16). A lower-bound
/// exploration only.
HarnessReport harness_alfin(int genus, int n_max, const std::vector<GenusFixture>& fixtures,
                            const HarnessOptions& opt = {});
std::vector<GenusFixture> default_genus_fixtures(int genus);

/// Some rotation system of the cubic graph g with Euler genus `genus`, found
/// by trying all 2^|V| of them in a fixed order.
std::optional<CombinatorialMap> rotation_with_genus(const Graph& g, int genus);

}  // namespace etc
