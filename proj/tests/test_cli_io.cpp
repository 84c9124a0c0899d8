#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "etc/canonical.hpp"
#include "etc/families.hpp"
#include "etc/io.hpp"
#include "etc/trace.hpp"

using namespace etc;
namespace fs = std::filesystem;

namespace {

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d(ETCG_WORK);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path work(const std::string& name) { return work_dir() / name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

// Runs the CLI with stdout and stderr captured in the work directory.
RunResult run(const std::string& args, const std::string& tag) {
  const auto out = work(tag + ".out"), err = work(tag + ".err");
  const std::string cmd = std::string("\"") + ETCG_EXE + "\" " + args + " >\"" + out.string() + "\" 2>\"" +
                          err.string() + "\"";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), slurp(out), slurp(err)};
}

fs::path save_document(const NamedFamilyInstance& inst, const std::string& name) {
  const auto p = work(name);
  write_file(p, serialize(document_from(inst)));
  return p;
}

}  // namespace

TEST_CASE("verify exit codes") {
  const auto q = save_document(q3(), "q3.json");
  const auto ok = run("verify " + q.string() + " --check=etgc", "verify-ok");
  CHECK(ok.code == 0);
  CHECK(Json::parse(ok.out).at("pass") == true);

  auto broken = document_from(q3());
  broken.assignments.at("primary").vertex[0] = (broken.assignments.at("primary").vertex[0] + 1) % 4;
  const auto b = work("q3-broken.json");
  write_file(b, serialize(broken));
  const auto bad = run("verify " + b.string() + " --check=etc", "verify-bad");
  CHECK(bad.code == 1);
  CHECK(Json::parse(bad.out).at("pass") == false);

  const auto m = work("malformed.json");
  write_file(m, "{\"format_version\": 1, \"n\": 4, \"edges\": [[0, 1], [1, 1]]}");
  CHECK(run("verify " + m.string() + " --check=tc", "verify-malformed").code == 2);
  write_file(m, "{ not json");
  CHECK(run("verify " + m.string() + " --check=tc", "verify-garbage").code == 2);
  CHECK(run("verify " + work("absent.json").string(), "verify-absent").code == 2);
  CHECK(run("verify " + q.string() + " --check=nonsense", "verify-check").code == 2);
}

TEST_CASE("construct writes parseable documents") {
  const auto g2 = work("gamma2.json");
  REQUIRE(run("construct gamma 2 --out " + g2.string(), "construct-gamma").code == 0);
  const auto d = parse_document(slurp(g2));
  CHECK(d.graph.order() == 40);
  CHECK(is_etgc(d.graph, d.assignments.at("primary")));

  const auto godd = work("godd1.json");
  REQUIRE(run("construct godd 1 --out " + godd.string(), "construct-godd").code == 0);
  const auto o = parse_document(slurp(godd));
  CHECK(o.graph.order() == 32);
  CHECK(o.schedule.size() == 8);

  CHECK(run("construct prism 0", "construct-prism0").code == 2);
  CHECK(run("construct nowhere 1", "construct-unknown").code == 2);
}

TEST_CASE("apply replays traces") {
  const auto traces = builtin_traces();
  const auto it = std::find_if(traces.begin(), traces.end(),
                               [](const ConstructionTrace& t) { return t.label.starts_with("q3-extend"); });
  REQUIRE(it != traces.end());
  const auto tp = work("trace.json"), out = work("trace-out.json");
  write_file(tp, format_json(to_json(*it)));
  REQUIRE(run("apply " + tp.string() + " --out " + out.string(), "apply-ok").code == 0);
  const auto d = parse_document(slurp(out));
  CHECK(isomorphic(d.graph, replay(*it).graph));

  ConstructionTrace bad;
  bad.label = "bad-exchange";
  TraceStep start;
  start.op = "start";
  start.family = "q3";
  start.parameter = 1;
  TraceStep ex;
  ex.op = "exchange";
  ex.sites = {{"(0,0)", "(1,0)", "(1,1)", "(0,1)"}};
  bad.steps = {start, ex};
  write_file(tp, format_json(to_json(bad)));
  const auto r = run("apply " + tp.string() + " --out " + out.string(), "apply-bad");
  CHECK(r.code == 1);
  CHECK(r.err.find("step 1") != std::string::npos);
}

TEST_CASE("search from the command line") {
  const auto k33 = work("k33.json");
  GraphDocument d;
  d.graph = k33_graph();
  write_file(k33, serialize(d));
  const auto r = run("search " + k33.string() + " --mode=etc", "search-k33");
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out).at("verdict") == "exhausted");

  const auto q = save_document(q3(), "q3-search.json");
  const auto f = run("search " + q.string() + " --mode=etgc", "search-q3");
  CHECK(f.code == 0);
  CHECK(Json::parse(f.out).at("verdict") == "found");

  const auto g3 = work("gamma3.json");
  REQUIRE(run("construct gamma 3 --out " + g3.string(), "construct-gamma3").code == 0);
  const auto c = run("search " + g3.string() + " --mode=etgc --count --budget=1", "search-budget");
  CHECK(c.code == 1);
  CHECK(Json::parse(c.out).at("verdict") == "timeout");
  CHECK(run("search " + g3.string() + " --budget=0", "search-budget0").code == 2);
}

TEST_CASE("harness output is identical across worker counts") {
  const auto one = run("harness theorem-fo --nmax=12 --jobs=1", "harness-1");
  const auto eight = run("harness theorem-fo --nmax=12 --jobs=8", "harness-8");
  CHECK(one.code == 0);
  CHECK(eight.code == 0);
  CHECK(one.out == eight.out);
  std::istringstream lines(one.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(Json::accept(line));
    ++count;
  }
  CHECK(count > 2);
  CHECK(run("harness theorem-fo --nmax=30", "harness-range").code == 2);
}

TEST_CASE("export to DOT and SVG") {
  const auto q = save_document(q3(), "q3-export.json");
  const auto dot = run("export " + q.string() + " --format=dot", "export-dot");
  CHECK(dot.code == 0);
  CHECK(dot.out.starts_with("graph"));
  CHECK(dot.out.find(color_hex(0)) != std::string::npos);
  const auto svg_path = work("q3.svg");
  CHECK(run("export " + q.string() + " --format=svg --out " + svg_path.string(), "export-svg").code == 0);
  CHECK(slurp(svg_path).find("<svg") != std::string::npos);

  GraphDocument plain;
  plain.graph = cube_graph();
  const auto p = work("plain.json");
  write_file(p, serialize(plain));
  CHECK(run("export " + p.string() + " --format=svg", "export-plain").code == 1);
  CHECK(run("export " + p.string() + " --format=dot", "export-plain-dot").code == 0);
}

TEST_CASE("document parsing rejects malformed input") {
  const auto good = to_json(document_from(q3()));
  auto mutate = [&](auto&& f) {
    Json j = good;
    f(j);
    return j;
  };
  CHECK_THROWS_AS(document_from_json(mutate([](Json& j) { j["format_version"] = 99; })), ParseError);
  CHECK_THROWS_AS(document_from_json(mutate([](Json& j) { j["edges"][0] = Json::array({0, 99}); })), ParseError);
  CHECK_THROWS_AS(document_from_json(mutate([](Json& j) { j["edges"].push_back(j["edges"][0]); })), ParseError);
  CHECK_THROWS_AS(document_from_json(mutate([](Json& j) { j.erase("edges"); })), ParseError);
  CHECK_THROWS_AS(parse_document("[1, 2"), ParseError);
  CHECK_NOTHROW(document_from_json(good));
}

TEST_CASE("color names map to fixed hex values") {
  CHECK(color_hex(0) == "#8e7618");
  CHECK(color_hex(1) == "#d62728");
  CHECK(color_hex(2) == "#1f5fd6");
  CHECK(color_hex(3) == "#2ca02c");
  CHECK(color_hex(kUnset) == "#444444");
}
