// treecount: spanning tree counts, constructions, formula checks and campaigns.
//
// Exit codes:
//   0  success
//   1  a campaign or experiment recorded failures / counterexamples
//   2  usage, parse or input error (bad file, unknown vertex, unknown id)
//   3  hypothesis violated (the message names the failed conditions)
//   4  --check found the formula and the direct count disagree
//   5  an enumeration or Tutte cap was exceeded

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "treecount/constructions.hpp"
#include "treecount/formulas.hpp"
#include "treecount/harness.hpp"
#include "treecount/io.hpp"
#include "treecount/kirchhoff.hpp"
#include "treecount/tutte.hpp"

using namespace treecount;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailures = 1;
constexpr int kInputError = 2;
constexpr int kHypothesis = 3;
constexpr int kMismatch = 4;
constexpr int kCap = 5;

json report_json(const HypothesisReport& report) {
  json conditions = json::array();
  for (const auto& c : report.conditions()) {
    json item = {{"name", c.name}, {"holds", c.holds}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    conditions.push_back(item);
  }
  return {{"ok", report.ok()}, {"conditions", conditions}};
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// --args accepts inline JSON or @file.
json load_args(const std::string& text) {
  std::string body = text.empty() ? "{}" : text;
  if (body.front() == '@') body = read_file(body.substr(1));
  try {
    return json::parse(body);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("--args: ") + e.what());
  }
}

std::vector<std::string> string_list(const json& args, const char* key) {
  if (!args.contains(key)) return {};
  return args.at(key).get<std::vector<std::string>>();
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::HypothesisViolated:
    case ErrorKind::EmptyEdgeSet:
    case ErrorKind::NotASubgraph:
    case ErrorKind::NotAPartition:
    case ErrorKind::NotCliquePartition:
    case ErrorKind::NotAForest:
    case ErrorKind::MNotContained:
    case ErrorKind::NotRegular:
    case ErrorKind::Disconnected:
      return kHypothesis;
    case ErrorKind::CapExceeded:
      return kCap;
    default:
      return kInputError;
  }
}

struct Options {
  std::string graph;
  std::string partition;
  std::string edges;
  std::string op;
  std::string args;
  std::string id;
  std::string mode = "corrected";
  std::string route = "matrix";
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultTreeCap;
  std::size_t tutte_cap = 14;
  std::vector<std::string> points;
  bool json_out = false;
  bool check = false;
  bool report_only = false;
  bool no_timing = false;
  bool parallel_classes = false;
};

LsubMode parse_mode(const std::string& mode) { return mode == "printed" ? LsubMode::printed : LsubMode::corrected; }

int run_count(const Options& o) {
  MultiGraph g = read_graph_file(o.graph);
  Count tau = count_spanning_trees(g);
  if (o.json_out) {
    std::cout << json{{"count", to_string(tau)}}.dump() << "\n";
  } else {
    std::cout << tau << "\n";
  }
  return kOk;
}

int run_count_constrained(const Options& o) {
  MultiGraph g = read_graph_file(o.graph);
  EdgeSet required = edges_labeled(g, split_list(o.edges));
  Count tau = count_constrained(g, required);
  if (o.json_out) {
    std::cout << json{{"count", to_string(tau)}, {"required", labels_of(g, required)}}.dump() << "\n";
  } else {
    std::cout << tau << "\n";
  }
  return kOk;
}

int run_construct(const Options& o) {
  MultiGraph g = read_graph_file(o.graph);
  json args = load_args(o.args);
  MultiGraph out;
  std::vector<std::string> notes{"construct " + o.op};
  if (o.op == "line") {
    out = line_graph(g).graph;
  } else if (o.op == "middle") {
    out = middle_graph(g).graph;
  } else if (o.op == "subdivision") {
    out = subdivision(g).graph;
  } else if (o.op == "star") {
    StarResult s = star_graph(g, edges_labeled(g, string_list(args, "W")));
    out = s.graph;
    notes.push_back("new edges: " + [&] {
      std::string joined;
      for (const auto& l : labels_of(out, s.new_edges)) joined += (joined.empty() ? "" : " ") + l;
      return joined;
    }());
  } else if (o.op == "bullet") {
    // U given as a list of parts identifies each part on its own.
    if (args.contains("U") && args.at("U").is_array() && !args.at("U").empty() && args.at("U").front().is_array()) {
      std::vector<VertexSet> parts;
      for (const auto& part : args.at("U")) parts.push_back(vertices_named(g, part.get<std::vector<std::string>>()));
      out = bullet_contract_parts(g, parts).graph;
    } else {
      out = bullet_contract(g, vertices_named(g, string_list(args, "U"))).graph;
    }
  } else if (o.op == "diamond") {
    EdgeSet fresh;
    if (args.contains("S")) {
      std::vector<EdgeSet> parts;
      for (const auto& part : args.at("S")) parts.push_back(edges_labeled(g, part.get<std::vector<std::string>>()));
      DiamondPartition d = diamond_partition(g, parts);
      out = d.graph;
      fresh = d.new_edges;
    } else {
      DiamondSubgraphResult d =
          diamond_subgraph(g, vertices_named(g, string_list(args, "V")), edges_labeled(g, string_list(args, "E")));
      out = d.graph;
      fresh = d.new_edges;
    }
    std::string joined;
    for (const auto& l : labels_of(out, fresh)) joined += (joined.empty() ? "" : " ") + l;
    notes.push_back("new edges: " + joined);
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown --op " + o.op);
  }
  if (o.json_out) {
    std::cout << graph_to_json(out).dump() << "\n";
  } else {
    std::cout << write_graph_text(out, notes);
  }
  return kOk;
}

int run_formula(const Options& o) {
  MultiGraph g = read_graph_file(o.graph);
  PartitionSpec spec = o.partition.empty() ? PartitionSpec{} : read_partition_file(o.partition);
  FormulaInput in = resolve_input(g, spec);
  EvalOptions opts;
  opts.cap = o.cap;
  opts.mode = parse_mode(o.mode);
  opts.route = o.route == "enumeration" ? Route::enumeration : Route::matrix_tree;

  FormulaResult result;
  try {
    result = evaluate_formula(o.id, in, opts);
  } catch (const HypothesisViolated& e) {
    if (o.report_only) {
      std::cout << report_json(e.report()).dump(2) << "\n";
      return kOk;
    }
    std::cerr << e.what() << "\n" << report_json(e.report()).dump(2) << "\n";
    return kHypothesis;
  }
  if (o.report_only) {
    std::cout << report_json(result.report).dump(2) << "\n";
    return kOk;
  }

  std::optional<Count> oracle;
  if (o.check) oracle = formula_oracle(o.id, in);
  bool agree = !oracle || result.value == Rational(*oracle);

  if (o.json_out) {
    json out = {{"id", o.id}, {"value", to_string(result.value)}, {"hypotheses", report_json(result.report)}};
    if (!result.details.empty()) out["details"] = result.details;
    if (oracle) {
      out["oracle"] = to_string(*oracle);
      out["agree"] = agree;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << to_string(result.value) << "\n";
  }
  if (!agree) {
    std::cerr << "mismatch: formula " << to_string(result.value) << ", direct count " << to_string(*oracle) << "\n";
    return kMismatch;
  }
  return kOk;
}

int run_verify(const Options& o) {
  InstanceSpec spec;
  spec.seed = o.seed;
  spec.mode = parse_mode(o.mode);
  spec.parallel_classes = o.parallel_classes;
  if (!o.graph.empty()) spec.graph = read_graph_file(o.graph);
  VerificationReport report = run_campaign(o.id, spec, o.trials);
  std::cout << report.to_json(!o.no_timing).dump(2) << "\n";
  return report.pass() ? kOk : kFailures;
}

int run_tutte_experiment(const Options& o) {
  std::vector<std::pair<Rational, Rational>> points;
  for (const auto& text : o.points.empty() ? std::vector<std::string>{"0,-1"} : o.points) {
    auto parts = split_list(text);
    if (parts.size() != 2) throw Error(ErrorKind::Parse, "--point expects \"x,y\", got \"" + text + "\"");
    points.emplace_back(parse_rational(parts[0]), parse_rational(parts[1]));
  }
  CutBounds bounds;
  bounds.edge_cap = o.tutte_cap;
  auto reports = tutte_cut_experiment(o.seed, o.trials, points, bounds);
  json out;
  bool clean = true;
  for (const auto& r : reports) clean = clean && r.counterexamples.empty();
  if (reports.size() == 1) {
    out = reports.front().to_json();
  } else {
    out = json::array();
    for (const auto& r : reports) out.push_back(r.to_json());
  }
  std::cout << out.dump(2) << "\n";
  return clean ? kOk : kFailures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning tree counting toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "Print the number of spanning trees");
  count->add_option("--graph", o.graph, "Graph file (text or JSON)")->required();
  count->add_flag("--json", o.json_out);

  auto* constrained = app.add_subcommand("count-constrained", "Count spanning trees containing given edges");
  constrained->add_option("--graph", o.graph)->required();
  constrained->add_option("--edges", o.edges, "Comma-separated edge labels");
  constrained->add_flag("--json", o.json_out);

  auto* construct = app.add_subcommand("construct", "Apply a graph construction");
  construct->add_option("--graph", o.graph)->required();
  construct->add_option("--op", o.op)
      ->required()
      ->check(CLI::IsMember({"line", "middle", "subdivision", "star", "bullet", "diamond"}));
  construct->add_option("--args", o.args, "JSON object or @file: W, U, V+E or S");
  construct->add_flag("--json", o.json_out);

  auto* formula = app.add_subcommand("formula", "Evaluate a counting formula");
  formula->add_option("--id", o.id)->required();
  formula->add_option("--graph", o.graph)->required();
  formula->add_option("--partition", o.partition, "Partition / constraint JSON file");
  formula->add_option("--mode", o.mode)->check(CLI::IsMember({"printed", "corrected"}));
  formula->add_option("--route", o.route, "How tree sums are evaluated")->check(CLI::IsMember({"matrix", "enumeration"}));
  formula->add_option("--cap", o.cap, "Enumeration cap");
  formula->add_flag("--check", o.check, "Compare against a direct count");
  formula->add_flag("--json", o.json_out);
  formula->add_flag("--report-only", o.report_only, "Print the hypothesis report only");

  auto* verify = app.add_subcommand("verify", "Run a randomized verification campaign");
  verify->add_option("--formula", o.id)->required();
  verify->add_option("--trials", o.trials);
  verify->add_option("--seed", o.seed);
  verify->add_option("--mode", o.mode)->check(CLI::IsMember({"printed", "corrected"}));
  verify->add_option("--graph", o.graph, "Use this graph in every trial (graph-only formulas)");
  verify->add_flag("--parallel-classes", o.parallel_classes);
  verify->add_flag("--no-timing", o.no_timing, "Omit elapsed time from the report");

  auto* tutte = app.add_subcommand("tutte-experiment", "Test the clique-cut Tutte identity");
  tutte->add_option("--trials", o.trials);
  tutte->add_option("--seed", o.seed);
  tutte->add_option("--point", o.points, "x,y (repeatable; default 0,-1)");
  tutte->add_option("--cap", o.tutte_cap, "Edge cap per instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*count) return run_count(o);
    if (*constrained) return run_count_constrained(o);
    if (*construct) return run_construct(o);
    if (*formula) return run_formula(o);
    if (*verify) return run_verify(o);
    if (*tutte) return run_tutte_experiment(o);
  } catch (const HypothesisViolated& e) {
    std::cerr << e.what() << "\n" << report_json(e.report()).dump(2) << "\n";
    return kHypothesis;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_for(e);
  } catch (const json::exception& e) {
    std::cerr << "Parse: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
