#include "mdlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mdlab/analysis.hpp"
#include "mdlab/checks.hpp"
#include "mdlab/errors.hpp"
#include "mdlab/extremal.hpp"
#include "mdlab/families.hpp"
#include "mdlab/graph6.hpp"
#include "mdlab/products.hpp"
#include "mdlab/report.hpp"
#include "mdlab/solver.hpp"

namespace mdlab::cli {

namespace {

constexpr int kDefaultCensusCap = 7;

// A failure that maps to a specific exit code.
struct Exit {
  int code;
  std::string message;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

class Input {
 public:
  explicit Input(std::istream& in) : in_(in) {}

  std::string line() {
    std::string s;
    while (std::getline(in_, s)) {
      s = trim(s);
      if (!s.empty()) return s;
    }
    throw Exit{kMalformed, "expected a line on standard input"};
  }

  std::string all() {
    std::ostringstream ss;
    ss << in_.rdbuf();
    return ss.str();
  }

 private:
  std::istream& in_;
};

Graph read_graph(const std::string& arg, Input& input) {
  const std::string text = arg == "-" ? input.line() : arg;
  try {
    return from_graph6(text);
  } catch (const ParseError& e) {
    throw Exit{kMalformed, std::string("malformed graph6: ") + e.what()};
  }
}

std::string read_text(const std::string& path, Input& input) {
  if (path == "-") return input.all();
  std::ifstream f(path);
  if (!f) throw Exit{kUsage, "cannot open " + path};
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

SearchConfig search_config(long long budget_ms, unsigned long long node_budget, bool ascending, bool plain_theta) {
  SearchConfig cfg;
  if (budget_ms <= 0) {
    if (const char* env = std::getenv("MDLAB_BUDGET_MS")) budget_ms = std::atoll(env);
  }
  if (budget_ms > 0) cfg.time_budget = std::chrono::milliseconds(budget_ms);
  if (node_budget > 0) cfg.node_budget = node_budget;
  cfg.descending = !ascending;
  cfg.merge_four_cycles = !plain_theta;
  return cfg;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monochromatic disconnection number toolkit", "mdlab"};
  app.require_subcommand(1);

  long long budget_ms = 0;
  unsigned long long node_budget = 0;
  bool ascending = false;
  bool plain_theta = false;
  const auto add_search_flags = [&](CLI::App* sub) {
    sub->add_option("--budget-ms", budget_ms, "Time budget per md computation (default: $MDLAB_BUDGET_MS or 10 min)");
    sub->add_option("--node-budget", node_budget, "Search node budget per md computation");
    sub->add_flag("--ascending", ascending, "Sweep k upwards from the lower bound");
    sub->add_flag("--theta-only", plain_theta, "Search over plain theta classes (no 4-cycle merging)");
  };

  std::string graph_arg;
  auto* md_cmd = app.add_subcommand("md", "Exact md(G) with certificate and bound trail");
  md_cmd->add_option("graph", graph_arg, "graph6 string or - for stdin")->required();
  add_search_flags(md_cmd);

  std::string coloring_path;
  auto* verify_cmd = app.add_subcommand("verify-coloring", "Check an MD-coloring given as JSON");
  verify_cmd->add_option("coloring", coloring_path, "coloring JSON file or - for stdin")->required();

  auto* closure_cmd = app.add_subcommand("closure", "Closure test and theta-class count");
  closure_cmd->add_option("graph", graph_arg, "graph6 string or - for stdin")->required();

  std::string family;
  std::vector<int> params;
  auto* gen_cmd = app.add_subcommand("gen", "Build a named family member");
  gen_cmd->add_option("family", family, "family name")->required();
  gen_cmd->add_option("params", params, "integer parameters");

  std::string kind_arg, left_arg, right_arg;
  auto* product_cmd = app.add_subcommand("product", "Graph product of two graph6 graphs");
  product_cmd->add_option("kind", kind_arg, "cartesian | strong | lexicographic | tensor")->required();
  product_cmd->add_option("first", left_arg, "graph6 or -")->required();
  product_cmd->add_option("second", right_arg, "graph6 or -")->required();

  std::string check_id;
  bool list_checks = false;
  CheckOptions check_opts;
  auto* check_cmd = app.add_subcommand("check", "Run a property suite by statement id or alias");
  check_cmd->add_option("id", check_id, "suite id (e.g. thm4.1) or alias");
  check_cmd->add_flag("--list", list_checks, "List the available suites");
  check_cmd->add_option("--max-order", check_opts.max_order, "Largest order visited");
  check_cmd->add_option("--sample", check_opts.sample, "Graphs sampled per order above the exhaustive range");
  check_cmd->add_option("--seed", check_opts.seed, "Sampling seed");
  check_cmd->add_option("--jobs", check_opts.jobs, "Worker threads for census-based suites");
  add_search_flags(check_cmd);

  std::string which;
  int census_n = 0;
  int census_r = 0;
  int jobs = 1;
  std::string catalog;
  bool long_run = false;
  auto* census_cmd = app.add_subcommand("census", "Exhaustive check of the f or g threshold");
  census_cmd->add_option("which", which, "f or g")->required()->check(CLI::IsMember({"f", "g"}));
  census_cmd->add_option("--n", census_n, "Order")->required();
  census_cmd->add_option("--r", census_r, "md target (default: every r)");
  census_cmd->add_option("--jobs", jobs, "Worker threads");
  census_cmd->add_option("--catalog", catalog, "graph6 file replacing the built-in enumeration");
  census_cmd->add_flag("--long-run", long_run, "Allow n = 8");
  add_search_flags(census_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Input input(in);
  try {
    const SearchConfig cfg = search_config(budget_ms, node_budget, ascending, plain_theta);

    if (md_cmd->parsed()) {
      const Graph g = read_graph(graph_arg, input);
      if (g.order() == 0 || !is_connected(g)) throw Exit{kUsage, "md needs a connected graph with at least one vertex"};
      const MdResult r = md_exact(g, cfg);
      emit(out, md_report(g, r));
      if (!r.exact()) err << "budget exhausted: md is in [" << r.lower << ", " << r.upper << "]\n";
      return r.exact() ? kOk : kUnknown;
    }

    if (verify_cmd->parsed()) {
      std::pair<Graph, EdgeColoring> parsed = [&] {
        try {
          return parse_coloring_json(read_text(coloring_path, input));
        } catch (const ParseError& e) {
          throw Exit{kMalformed, e.what()};
        }
      }();
      const auto& [g, c] = parsed;
      const MdCheck check = is_md_coloring(g, c);
      emit(out, verification_report(g, c, check));
      return check.md ? kOk : kFalsified;
    }

    if (closure_cmd->parsed()) {
      const Graph g = read_graph(graph_arg, input);
      const bool closure = is_closure(g);
      emit(out, closure_report(g, theta_classes(g), closure));
      return closure ? kOk : kFalsified;
    }

    if (gen_cmd->parsed()) {
      const auto kind = parse_family(family);
      if (!kind) {
        std::string known;
        for (const auto& name : family_names()) known += " " + name;
        throw Exit{kUsage, "unknown family '" + family + "'; known:" + known};
      }
      const NamedGraph built = build({*kind, params});
      Json names = Json::object();
      for (const auto& [name, v] : built.names) names[name] = v;
      out << to_graph6(built.graph) << '\n';
      out << Json{{"family", family_name(*kind)},
                  {"params", params},
                  {"order", built.graph.order()},
                  {"size", built.graph.size()},
                  {"vertices", names}}
                 .dump()
          << '\n';
      return kOk;
    }

    if (product_cmd->parsed()) {
      const auto kind = parse_product_kind(kind_arg);
      if (!kind) throw Exit{kUsage, "unknown product kind '" + kind_arg + "'"};
      const Graph g = read_graph(left_arg, input);
      const Graph h = read_graph(right_arg, input);
      out << to_graph6(product(g, h, *kind)) << '\n';
      return kOk;
    }

    if (check_cmd->parsed()) {
      if (list_checks) {
        for (const CheckInfo& info : check_catalog()) {
          out << info.id << '\t' << info.alias << '\t' << info.statement << '\n';
        }
        return kOk;
      }
      if (check_id.empty()) throw Exit{kUsage, "check needs a suite id (see check --list)"};
      if (!resolve_check(check_id)) throw Exit{kUsage, "unknown theorem id '" + check_id + "' (see check --list)"};
      check_opts.search = cfg;
      const CheckResult r = run_check(check_id, check_opts);
      emit(out, Json{{"id", r.id},
                     {"name", r.name},
                     {"statement", r.statement},
                     {"max_order", r.max_order},
                     {"passed", r.passed()},
                     {"cases", r.cases},
                     {"failure_count", r.failure_count},
                     {"unknown", r.unknown},
                     {"failures", r.failures},
                     {"notes", r.notes},
                     {"stats", {{"nodes", r.stats.nodes}, {"elapsed_ms", r.stats.elapsed_ms}}}});
      if (r.failure_count > 0 || r.cases == 0) return kFalsified;
      return r.unknown > 0 ? kUnknown : kOk;
    }

    if (census_cmd->parsed()) {
      const int cap = long_run ? kEnumerationCap : kDefaultCensusCap;
      if (census_n < 2 || census_n > cap) {
        throw Exit{kUsage, "census needs 2 <= n <= " + std::to_string(cap) + (long_run ? "" : " (n = 8 needs --long-run)")};
      }
      if (census_r != 0 && (census_r < 1 || census_r > census_n - 1)) throw Exit{kUsage, "census needs 1 <= r <= n-1"};
      CensusOptions co;
      co.search = cfg;
      co.jobs = std::max(1, jobs);
      co.max_order = cap;
      Census census = [&] {
        if (catalog.empty()) return Census::enumerate(census_n, co);
        std::istringstream lines(read_text(catalog, input));
        std::vector<Graph> graphs;
        for (std::string line; std::getline(lines, line);) {
          line = trim(line);
          if (line.empty()) continue;
          try {
            graphs.push_back(from_graph6(line));
          } catch (const ParseError& e) {
            throw Exit{kMalformed, std::string("catalog: ") + e.what()};
          }
        }
        return Census::from_graphs(census_n, graphs, co);
      }();
      std::vector<ThresholdReport> reports;
      for (int r = 1; r <= census_n - 1; ++r) {
        if (census_r != 0 && r != census_r) continue;
        reports.push_back(which == "f" ? verify_f(census, r) : verify_g(census, r));
      }
      Json doc = Json::array();
      for (const auto& r : reports) doc.push_back(threshold_report(r));
      emit(out, census_r != 0 ? doc.front() : doc);
      const bool any_cx = std::any_of(reports.begin(), reports.end(), [](const auto& r) {
        return !r.counterexamples.empty() || r.witness_source == "none";
      });
      const bool any_unknown = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return !r.inconclusive.empty(); });
      if (any_cx) return kFalsified;
      return any_unknown ? kUnknown : kOk;
    }
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kMalformed;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace mdlab::cli
