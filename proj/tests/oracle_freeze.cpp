// Runs the brute-force oracle over the small fixtures and prints the records
// to freeze under data/oracle_small.json.

#include <chrono>
#include <iostream>

#include "oracle.hpp"

int main() {
  using namespace etc::testing;
  std::vector<OracleRecord> records;
  const auto t0 = std::chrono::steady_clock::now();
  for (auto& [label, g] : small_fixtures()) {
    OracleRecord r;
    r.label = label;
    r.n = g.order();
    r.edges = g.edges();
    r.counts = naive_counts(g);
    std::cerr << label << ": " << r.counts.total_colorings << " colorings, " << r.counts.etc << " ETC, "
              << r.counts.etgc << " ETGC\n";
    records.push_back(std::move(r));
  }
  std::cerr << "elapsed "
            << std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0).count()
            << " s\n";
  std::cout << oracle_records_json(records);
}
