// etcg: construct, validate, search and export efficient total colorings.
// Exit codes: 0 pass, 1 semantic failure, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "etc/canonical.hpp"
#include "etc/io.hpp"

namespace {

using namespace etc;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

struct InputError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GraphDocument load(const std::string& path) { return parse_document(read_file(path)); }

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw InputError("cannot write '" + out + "'");
  f << text;
}

const TotalAssignment& pick(const GraphDocument& d, const std::string& name) {
  auto it = d.assignments.find(name);
  if (it == d.assignments.end()) throw InputError("document has no assignment '" + name + "'");
  return it->second;
}

// Returns pass/fail and a reason for failures that are not a plain "false".
std::pair<bool, std::string> run_check(const std::string& check, const Graph& g, const TotalAssignment& a) {
  try {
    if (check == "tc") return {is_total_coloring(g, a), ""};
    if (check == "etc") return {is_etc(g, a), ""};
    if (check == "vegc") return {is_vegc(g, a), ""};
    if (check == "etgc") return {is_etgc(g, a), ""};
    if (check == "egc") return {is_egc(g, a.edge), ""};
    if (check == "stc") return {is_stc(g, a), ""};
    if (check == "perfect-stc") return {is_stc(g, a) && tpc_partition(g, a).perfect, ""};
    return {tpc_partition(g, a).perfect, ""};
  } catch (const Error& e) {
    return {false, e.what()};
  }
}

int cmd_verify(const std::string& file, const std::string& check, const std::string& name) {
  const auto d = load(file);
  const auto& a = pick(d, name);
  const auto [ok, reason] = run_check(check, d.graph, a);
  Json r{{"file", file}, {"check", check}, {"assignment", name}, {"pass", ok}};
  if (!reason.empty()) r["reason"] = reason;
  std::cout << r.dump() << "\n";
  return ok ? kPass : kFail;
}

int cmd_construct(const std::string& family, int param, const std::string& out) {
  NamedFamilyInstance inst;
  try {
    inst = construct_family(family, param);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  emit(serialize(document_from(inst)), out);
  return kPass;
}

int cmd_apply(const std::string& file, const std::string& out) {
  ConstructionTrace t;
  try {
    t = trace_from_json(Json::parse(read_file(file)));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  try {
    emit(serialize(document_from(replay(t))), out);
  } catch (const TraceError& e) {
    std::cerr << "etcg: " << e.what() << "\n";
    return kFail;
  }
  return kPass;
}

SearchMode parse_mode(const std::string& s) { return s == "etgc" ? SearchMode::etgc : SearchMode::etc; }

int cmd_search(const std::string& file, const std::string& mode, std::int64_t budget, bool count,
               bool orthogonal, const std::string& base) {
  const auto d = load(file);
  SearchOptions opt;
  opt.max_nodes = budget;
  try {
    if (count) {
      auto r = count_etcs(d.graph, parse_mode(mode), opt);
      std::cout << to_json(r).dump() << "\n";
      return r.verdict == SearchVerdict::exhausted ? kPass : kFail;
    }
    if (orthogonal) {
      std::optional<TotalAssignment> b;
      if (d.assignments.count(base)) b = d.assignments.at(base);
      auto r = find_orthogonal_pair(d.graph, b, opt);
      std::cout << to_json(r).dump() << "\n";
      return r.partner.verdict == SearchVerdict::found ? kPass : kFail;
    }
    auto r = find_etc(d.graph, parse_mode(mode), opt);
    std::cout << to_json(r).dump() << "\n";
    return r.verdict == SearchVerdict::found ? kPass : kFail;
  } catch (const Error& e) {
    // Precondition failures of the wrapped search: not cubic, girth, no ETC.
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return kFail;
  }
}

int cmd_harness(const std::string& which, int n_max, int jobs, std::int64_t budget, int genus,
                const std::vector<std::string>& trace_files, const std::string& format) {
  HarnessOptions opt;
  opt.workers = jobs;
  opt.max_nodes = budget;
  HarnessReport r;
  if (which == "theorem-fo") {
    r = harness_theorem_fo(n_max, default_certificate_claims(), opt);
  } else if (which == "toroid") {
    r = harness_toroid_conjecture(default_toroid_fixtures(), opt);
  } else if (which == "con1") {
    auto traces = builtin_traces();
    for (const auto& f : trace_files) {
      try {
        traces.push_back(trace_from_json(Json::parse(read_file(f))));
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
      }
    }
    r = harness_con1(traces, n_max, opt);
  } else {
    r = harness_alfin(genus, n_max, default_genus_fixtures(genus), opt);
  }
  if (format == "json")
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << to_json_lines(r);
  std::cerr << r.hypothesis << " over " << r.population << ": " << to_string(r.summary) << " ("
            << r.entries.size() << " entries)\n";
  return r.summary == HarnessSummary::consistent ? kPass : kFail;
}

int cmd_export(const std::string& file, const std::string& format, const std::string& name, const std::string& out) {
  const auto d = load(file);
  if (!d.assignments.empty() && !d.assignments.count(name))
    throw InputError("document has no assignment '" + name + "'");
  if (format == "svg") {
    if (!d.cutout) {
      std::cerr << "etcg: svg export needs cutout placements\n";
      return kFail;
    }
    emit(to_svg(d, name), out);
  } else {
    emit(to_dot(d, name), out);
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Efficient total colorings of cubic graphs of girth 4"};
  app.require_subcommand(1);

  std::string file, check = "etc", name = "primary", out, family, mode = "etc", which, format, base = "primary";
  int param = 0, n_max = 12, jobs = 1, genus = 1;
  std::int64_t budget = 50'000'000;
  bool count = false, orthogonal = false;
  std::vector<std::string> trace_files;

  auto* verify = app.add_subcommand("verify", "Validate an assignment of a document");
  verify->add_option("file", file, "Graph document")->required();
  verify->add_option("--check", check, "Property to check")
      ->check(CLI::IsMember({"tc", "etc", "vegc", "etgc", "egc", "stc", "perfect-stc", "tpc"}));
  verify->add_option("--assignment", name, "Named assignment to check");

  auto* construct = app.add_subcommand("construct", "Build a family member as a document");
  construct->add_option("family", family, "q3, prism, tess, gamma, godd, or a named drawing")->required();
  construct->add_option("param", param, "Family parameter");
  construct->add_option("--out", out, "Output file (default stdout)");

  auto* apply = app.add_subcommand("apply", "Replay a construction trace");
  apply->add_option("trace", file, "Trace file")->required();
  apply->add_option("--out", out, "Output file (default stdout)");

  auto* search = app.add_subcommand("search", "Search for an ETC or ETGC");
  search->add_option("file", file, "Graph document")->required();
  search->add_option("--mode", mode, "etc or etgc")->check(CLI::IsMember({"etc", "etgc"}));
  search->add_option("--budget", budget, "Node ceiling")->check(CLI::PositiveNumber);
  search->add_flag("--count", count, "Count solutions up to color permutation");
  search->add_flag("--orthogonal", orthogonal, "Find an orthogonal partner");
  search->add_option("--base", base, "Assignment to pair with (--orthogonal)");

  auto* harness = app.add_subcommand("harness", "Run a falsification harness");
  harness->add_option("hypothesis", which, "theorem-fo, toroid, con1 or alfin")
      ->required()
      ->check(CLI::IsMember({"theorem-fo", "toroid", "con1", "alfin"}));
  harness->add_option("--nmax", n_max, "Largest enumerated order")->check(CLI::Range(4, 20));
  harness->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  harness->add_option("--budget", budget, "Node ceiling per search")->check(CLI::PositiveNumber);
  harness->add_option("--genus", genus, "Euler genus (alfin)")->check(CLI::Range(1, 2));
  harness->add_option("--trace", trace_files, "Extra trace files (con1)");
  format = "jsonl";
  harness->add_option("--format", format, "jsonl or json")->check(CLI::IsMember({"jsonl", "json"}));

  auto* exp = app.add_subcommand("export", "Render a document");
  std::string export_format = "dot";
  exp->add_option("file", file, "Graph document")->required();
  exp->add_option("--format", export_format, "dot or svg")->check(CLI::IsMember({"dot", "svg"}));
  exp->add_option("--assignment", name, "Named assignment to draw");
  exp->add_option("--out", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*verify) return cmd_verify(file, check, name);
    if (*construct) return cmd_construct(family, param, out);
    if (*apply) return cmd_apply(file, out);
    if (*search) return cmd_search(file, mode, budget, count, orthogonal, base);
    if (*harness) return cmd_harness(which, n_max, jobs, budget, genus, trace_files, format);
    return cmd_export(file, export_format, name, out);
  } catch (const InputError& e) {
    std::cerr << "etcg: " << e.what() << "\n";
    return kInput;
  } catch (const ParseError& e) {
    std::cerr << "etcg: " << e.what() << "\n";
    return kInput;
  } catch (const Error& e) {
    std::cerr << "etcg: " << e.what() << "\n";
    return kFail;
  }
}
