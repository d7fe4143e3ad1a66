#include <doctest.h>

#include <sstream>

#include "mdlab/cli.hpp"
#include "mdlab/coloring.hpp"
#include "mdlab/families.hpp"
#include "mdlab/graph6.hpp"
#include "mdlab/report.hpp"

using namespace mdlab;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Json json_of(const Run& r) { return Json::parse(r.out); }

std::string petersen6() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));
    edges.push_back(make_edge(i, i + 5));
    edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
  }
  return to_graph6(Graph(10, edges));
}

}  // namespace

TEST_CASE("md of a triangle") {
  const Run r = run({"md", "Bw"});
  CHECK(r.code == cli::kOk);
  const Json j = json_of(r);
  CHECK(j["value"] == 1);
  CHECK(j["status"] == "exact");
  CHECK(j.contains("stats"));
}

TEST_CASE("gen output feeds md through stdin") {
  const Run gen = run({"gen", "H", "7"});
  REQUIRE(gen.code == cli::kOk);
  const std::string g6 = gen.out.substr(0, gen.out.find('\n'));
  const Json meta = Json::parse(gen.out.substr(gen.out.find('\n') + 1));
  CHECK(meta["size"] == 9);
  CHECK(meta["family"] == "H");
  const Run md = run({"md", "-"}, g6 + "\n");
  CHECK(md.code == cli::kOk);
  CHECK(json_of(md)["value"] == 1);
}

TEST_CASE("census of the g threshold") {
  const Run r = run({"census", "g", "--n", "7", "--r", "3"});
  CHECK(r.code == cli::kOk);
  const Json j = json_of(r);
  CHECK(j["verified"] == true);
  CHECK(j["threshold"] == 8);
  const Run all = run({"census", "f", "--n", "5", "--jobs", "2"});
  CHECK(all.code == cli::kOk);
  CHECK(json_of(all).size() == 4);
}

TEST_CASE("closure and product") {
  CHECK(run({"closure", "Bw"}).code == cli::kOk);
  const Run c4 = run({"closure", to_graph6(cycle_graph(4))});
  CHECK(c4.code == cli::kFalsified);
  CHECK(json_of(c4)["closure"] == false);
  const Run p = run({"product", "strong", to_graph6(complete_graph(2)), to_graph6(complete_graph(2))});
  CHECK(p.code == cli::kOk);
  CHECK(p.out == to_graph6(complete_graph(4)) + "\n");
}

TEST_CASE("verify-coloring") {
  const Graph c4 = cycle_graph(4);
  const std::string good = coloring_json(c4, cycle_md_coloring(4)).dump();
  const Run ok = run({"verify-coloring", "-"}, good);
  CHECK(ok.code == cli::kOk);
  CHECK(json_of(ok)["md_coloring"] == true);
  const std::string bad = coloring_json(c4, EdgeColoring(c4, {1, 1, 1, 2})).dump();
  const Run no = run({"verify-coloring", "-"}, bad);
  CHECK(no.code == cli::kFalsified);
  CHECK(json_of(no)["unseparated"].size() == 1);
  CHECK(run({"verify-coloring", "-"}, "{\"graph6\": \"Bw\"}").code == cli::kMalformed);
  CHECK(run({"verify-coloring", "-"}, "not json").code == cli::kMalformed);
}

TEST_CASE("check suites") {
  const Run r = run({"check", "thm4.1", "--max-order", "8"});
  CHECK(r.code == cli::kOk);
  CHECK(json_of(r)["passed"] == true);
  CHECK(run({"check", "cartesian-additivity", "--max-order", "6"}).code == cli::kOk);
  const Run list = run({"check", "--list"});
  CHECK(list.code == cli::kOk);
  CHECK(list.out.find("thm3.14") != std::string::npos);
}

TEST_CASE("exit codes for errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"md", "B?"}).code == cli::kUsage);
  CHECK(run({"md", "Bxx"}).code == cli::kMalformed);
  CHECK(run({"gen", "nope", "3"}).code == cli::kUsage);
  CHECK(run({"gen", "H_nr", "5", "3"}).code == cli::kUsage);
  CHECK(run({"check", "thm9.9"}).code == cli::kUsage);
  CHECK(run({"census", "g", "--n", "8"}).code == cli::kUsage);
  CHECK(run({"product", "weird", "Bw", "Bw"}).code == cli::kUsage);
  const Run bad = run({"gen", "nope"});
  CHECK(bad.err.find("unknown family") != std::string::npos);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("budget exhaustion is reported as unknown") {
  const Run r = run({"md", petersen6(), "--node-budget", "1"});
  CHECK(r.code == cli::kUnknown);
  CHECK(json_of(r)["status"] == "unknown");
}

TEST_CASE("canonical sections are byte-identical across runs") {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"md", petersen6()}, {"census", "f", "--n", "6"}, {"check", "lem2.5", "--max-order", "5"}}) {
    const Run a = run(args);
    const Run b = run(args);
    CHECK(canonical_part(json_of(a)).dump() == canonical_part(json_of(b)).dump());
  }
}
