#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "oddcolor/coloring.hpp"
#include "oddcolor/constructive.hpp"
#include "oddcolor/exact.hpp"
#include "oddcolor/generators.hpp"
#include "oddcolor/graph.hpp"
#include "oddcolor/rational.hpp"
#include "oddcolor/sparsity.hpp"

namespace oddcolor::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SemanticFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string output;
  std::string format = "edgelist";
  std::string strategy = "auto";
  std::string epsilon;
  std::string alpha;
  std::string coloring;
  bool witness = false;
  std::optional<double> timeout;
  std::optional<int> max_k;
  std::vector<std::string> gen_args;
};

std::string slurp(std::istream& is) {
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return slurp(in);
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return slurp(file);
}

Graph read_graph(const Options& opt, std::istream& in) {
  return parse_graph(read_source(opt.input, in), parse_graph_format(opt.format));
}

SolveBudget budget_from(const Options& opt) {
  SolveBudget budget;
  if (opt.timeout) {
    if (*opt.timeout <= 0) throw UsageError("--timeout must be positive");
    budget.time_limit = std::chrono::milliseconds(static_cast<long long>(*opt.timeout * 1000));
  }
  if (opt.max_k) {
    if (*opt.max_k < 1) throw UsageError("--max-k must be positive");
    budget.max_k = *opt.max_k;
  }
  return budget;
}

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const RationalError& e) {
    throw UsageError(flag + ": " + e.what() + " (expected p/q or an integer)");
  }
}

int parse_count(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw UsageError("expected an integer " + what + ", got '" + text + "'");
  }
}

std::string cmd_mad(const Options& opt, std::istream& in) {
  return witness_report(mad_exact(read_graph(opt, in)), opt.witness);
}

std::string cmd_color(const Options& opt, std::istream& in) {
  const Graph g = read_graph(opt, in);
  const bool has_budget = opt.timeout.has_value() || opt.max_k.has_value();
  ColoringResult result;
  const std::string& s = opt.strategy;
  if (s == "auto") {
    result = color_auto(g, has_budget ? std::optional<SolveBudget>(budget_from(opt)) : std::nullopt);
  } else if (s == "forest") {
    result = color_forest(g);
  } else if (s == "cycle") {
    result = color_cycle_graph(g);
  } else if (s == "five") {
    result = color_mad20_7(g);
  } else if (s == "six") {
    result = color_mad3(g);
  } else if (s == "eps") {
    Rational eps;
    if (!opt.epsilon.empty()) {
      eps = parse_rational_flag(opt.epsilon, "--epsilon");
    } else {
      const Rational mad = g.num_vertices() > 0 ? mad_exact(g).mad : Rational(0);
      if (mad >= Rational(4)) {
        throw PreconditionError("mad(G) = " + mad.to_string() + " >= 4; no epsilon applies");
      }
      eps = std::min(Rational(4) - mad, Rational(8, 5));
    }
    result = color_mad4(g, eps);
  } else {
    throw UsageError("unknown strategy '" + s + "'");
  }
  return to_json(result);
}

std::string cmd_verify(const Options& opt, std::istream& in) {
  if (opt.coloring.empty()) throw UsageError("verify needs --coloring");
  if ((opt.input.empty() || opt.input == "-") && opt.coloring == "-") {
    throw UsageError("graph and coloring cannot both come from stdin");
  }
  const Graph g = read_graph(opt, in);
  const ColoringFile file = parse_coloring_json(read_source(opt.coloring, in));
  auto verdict = is_odd_coloring(g, file.colors);
  if (verdict.valid) return "VALID\n";
  std::string report;
  for (const auto& v : verdict.violations) report += v.to_string() + "\n";
  throw SemanticFailure(report);
}

std::string cmd_exact(const Options& opt, std::istream& in) {
  auto result = chi_o_exact(read_graph(opt, in), budget_from(opt));
  std::string report = exact_report_json(result);
  if (!result.exact()) throw SemanticFailure(report);
  return report;
}

std::string cmd_gen(const Options& opt, std::istream& in) {
  const auto& a = opt.gen_args;
  if (a.empty()) throw UsageError("gen needs a family: kstar|cycle|path|complete|subdivide|cycle-leaves");
  auto need = [&](std::size_t count) {
    if (a.size() != count) throw UsageError("gen " + a[0] + ": wrong number of arguments");
  };
  Graph g;
  if (a[0] == "kstar") {
    need(2);
    g = gen_kstar(parse_count(a[1], "n"));
  } else if (a[0] == "cycle") {
    need(2);
    g = gen_cycle(parse_count(a[1], "n"));
  } else if (a[0] == "path") {
    need(2);
    g = gen_path(parse_count(a[1], "n"));
  } else if (a[0] == "complete") {
    need(2);
    g = gen_complete(parse_count(a[1], "n"));
  } else if (a[0] == "subdivide") {
    need(1);
    g = subdivide(read_graph(opt, in));
  } else if (a[0] == "cycle-leaves") {
    need(3);
    std::vector<int> counts;
    std::stringstream list(a[2]);
    for (std::string item; std::getline(list, item, ',');) counts.push_back(parse_count(item, "leaf count"));
    g = gen_cycle_with_leaves(parse_count(a[1], "n"), counts);
  } else {
    throw UsageError("unknown generator '" + a[0] + "'");
  }
  return serialize_graph(g, parse_graph_format(opt.format));
}

std::string cmd_girth(const Options& opt, std::istream& in) {
  return girth(read_graph(opt, in)).to_string() + "\n";
}

std::string cmd_orient(const Options& opt, std::istream& in) {
  if (opt.alpha.empty()) throw UsageError("orient needs --alpha");
  const Rational alpha = parse_rational_flag(opt.alpha, "--alpha");
  if (alpha < Rational(0)) throw UsageError("--alpha must be non-negative");
  auto orientation = fractional_orientation(read_graph(opt, in), alpha);
  if (!orientation) throw SemanticFailure("INFEASIBLE\n");
  return orientation_report(*orientation, alpha);
}

void add_io(CLI::App* sub, Options& opt, bool with_format = true) {
  sub->add_option("-i,--input", opt.input, "Input graph file (default: stdin)");
  sub->add_option("-o,--output", opt.output, "Output file (default: stdout)");
  if (with_format) {
    sub->add_option("--format", opt.format, "Graph format")
        ->check(CLI::IsMember({"edgelist", "dimacs"}));
  }
}

void add_budget(CLI::App* sub, Options& opt) {
  sub->add_option("--timeout", opt.timeout, "Exact-solver time limit in seconds");
  sub->add_option("--max-k", opt.max_k, "Largest number of colors the exact solver tries");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Odd colorings, maximum average degree and related constructions", "oddcolor"};
  app.require_subcommand(1);
  Options opt;

  auto* mad = app.add_subcommand("mad", "Exact maximum average degree");
  add_io(mad, opt);
  mad->add_flag("--witness", opt.witness, "Also print a densest subgraph");

  auto* color = app.add_subcommand("color", "Constructive odd coloring");
  add_io(color, opt);
  color->add_option("--strategy", opt.strategy, "auto|forest|cycle|five|six|eps")
      ->check(CLI::IsMember({"auto", "forest", "cycle", "five", "six", "eps"}));
  color->add_option("--epsilon", opt.epsilon, "Epsilon p/q for the eps strategy");
  add_budget(color, opt);

  auto* verify = app.add_subcommand("verify", "Check an odd coloring");
  add_io(verify, opt);
  verify->add_option("--coloring", opt.coloring, "Coloring JSON file ('-' for stdin)");

  auto* exact = app.add_subcommand("exact", "Exact odd chromatic number");
  add_io(exact, opt);
  add_budget(exact, opt);

  auto* gen = app.add_subcommand("gen", "Generate a graph");
  add_io(gen, opt);
  gen->add_option("family", opt.gen_args,
                  "kstar N | cycle N | path N | complete N | subdivide | cycle-leaves N c1,c2,...")
      ->required();

  auto* girth_cmd = app.add_subcommand("girth", "Length of a shortest cycle");
  add_io(girth_cmd, opt);

  auto* orient = app.add_subcommand("orient", "Fractional orientation with indegree <= alpha/2");
  add_io(orient, opt);
  orient->add_option("--alpha", opt.alpha, "Bound alpha as p/q");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  std::string report;
  int code = kExitOk;
  try {
    if (*mad) report = cmd_mad(opt, in);
    else if (*color) report = cmd_color(opt, in);
    else if (*verify) report = cmd_verify(opt, in);
    else if (*exact) report = cmd_exact(opt, in);
    else if (*gen) report = cmd_gen(opt, in);
    else if (*girth_cmd) report = cmd_girth(opt, in);
    else if (*orient) report = cmd_orient(opt, in);
  } catch (const SemanticFailure& e) {
    report = e.what();
    code = kExitFailure;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ColoringError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (opt.output.empty() || opt.output == "-") {
    out << report;
  } else {
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << opt.output << "'\n";
      return kExitUsage;
    }
    file << report;
  }
  return code;
}

}  // namespace oddcolor::cli
