// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mdlab/checks.hpp"
#include "mdlab/cli.hpp"
#include "mdlab/coloring.hpp"
#include "mdlab/extremal.hpp"
#include "mdlab/families.hpp"
#include "mdlab/graph6.hpp"
#include "mdlab/report.hpp"

using namespace mdlab;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void fail(const std::string& why) {
    pass = false;
    details.push_back(why);
  }
};

using Clock = std::chrono::steady_clock;

Outcome suites(const std::vector<std::string>& ids) {
  Outcome out;
  for (const std::string& id : ids) {
    const CheckResult r = run_check(id);
    std::ostringstream line;
    line << id << ": " << r.cases << " cases";
    if (!r.passed()) {
      line << ", " << r.failure_count << " failures, " << r.unknown << " unknown";
      for (const std::string& f : r.failures) line << "; " << f;
      out.fail(line.str());
    } else {
      out.details.push_back(line.str());
    }
  }
  return out;
}

Outcome thresholds() {
  Outcome out;
  CensusOptions opts;
  opts.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  for (int n = 4; n <= 7; ++n) {
    const Census census = Census::enumerate(n, opts);
    int verified = 0;
    for (int r = 1; r <= n - 1; ++r) {
      for (const ThresholdReport& rep : {verify_f(census, r), verify_g(census, r)}) {
        if (rep.verified) {
          ++verified;
          continue;
        }
        std::ostringstream why;
        why << rep.which << "(" << n << "," << r << ") not verified: " << rep.counterexamples.size()
            << " counterexamples, " << rep.inconclusive.size() << " inconclusive, witness " << rep.witness_source;
        out.fail(why.str());
      }
    }
    out.details.push_back("n=" + std::to_string(n) + ": " + std::to_string(verified) + "/" +
                          std::to_string(2 * (n - 1)) + " verified over " + std::to_string(census.entries().size()) +
                          " graphs");
  }
  return out;
}

struct Run {
  int code = 0;
  std::string out;
};

Run invoke(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  return r;
}

// Canonical text of one command's output: JSON documents lose their stats,
// other lines are kept verbatim.
std::string canonical_text(const std::string& output) {
  std::ostringstream text;
  try {
    text << canonical_part(Json::parse(output)).dump();
    return text.str();
  } catch (const Json::parse_error&) {
  }
  std::istringstream lines(output);
  for (std::string line; std::getline(lines, line);) {
    try {
      text << canonical_part(Json::parse(line)).dump() << '\n';
    } catch (const Json::parse_error&) {
      text << line << '\n';
    }
  }
  return text.str();
}

Outcome determinism() {
  Outcome out;
  const std::string c6 = to_graph6(cycle_graph(6));
  const std::string coloring = coloring_json(cycle_graph(6), cycle_md_coloring(6)).dump();
  const std::vector<std::pair<std::vector<std::string>, std::string>> commands = {
      {{"md", to_graph6(h_nr_graph(10, 3).graph)}, ""},
      {{"md", "-"}, c6 + "\n"},
      {{"md", c6, "--ascending", "--theta-only"}, ""},
      {{"verify-coloring", "-"}, coloring},
      {{"closure", to_graph6(complete_graph(5))}, ""},
      {{"closure", c6}, ""},
      {{"gen", "H_nr", "11", "4"}, ""},
      {{"gen", "D", "5"}, ""},
      {{"product", "tensor", to_graph6(cycle_graph(5)), to_graph6(complete_graph(2))}, ""},
      {{"check", "thm4.6", "--max-order", "8"}, ""},
      {{"check", "lem2.2", "--max-order", "5"}, ""},
      {{"census", "f", "--n", "6", "--jobs", "2"}, ""},
      {{"census", "g", "--n", "6", "--r", "3"}, ""},
  };
  for (const auto& [args, input] : commands) {
    std::string label;
    for (const std::string& a : args) label += (label.empty() ? "" : " ") + a;
    const Run a = invoke(args, input);
    const Run b = invoke(args, input);
    if (a.code != b.code || canonical_text(a.out) != canonical_text(b.out)) {
      out.fail("differs: " + label);
    } else if (a.out.empty()) {
      out.fail("no output: " + label);
    }
  }
  out.details.push_back(std::to_string(commands.size()) + " commands run twice");
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string title;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria = {
      {1, "exact solver equals brute-force oracle (n <= 6, m <= 10)", [] { return suites({"oracle"}); }},
      {2, "stated md values of the named families", [] { return suites({"constants"}); }},
      {3, "exhaustive f and g threshold sweeps at n = 4..7", thresholds},
      {4, "product theorems on the factor catalog",
       [] { return suites({"thm4.1", "cor4.3", "lem4.4", "thm4.5", "thm4.6", "cor4.10"}); }},
      {5, "lemma-level property suites",
       [] {
         return suites({"lem1.4", "lem2.2", "claim3.4", "lem2.4", "lem2.5", "lem3.5", "thm1.7", "thm2.6", "thm1.8"});
       }},
      {6, "repeated commands give identical canonical output", determinism},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << secs << " s)\n";
    for (const std::string& d : o.details) std::cout << "    " << d << '\n';
  }
  return all ? 0 : 1;
}
