// hfa: command-line front end for the hesitant fuzzy set library.
#include "hfa/commands.hpp"
#include "hfa/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

namespace {

hfa::RelationKind parse_kind(const std::string& text) {
  if (text.size() != 1) throw hfa::InvalidArgument("relation kind must be one of p, a, m, s, t, n");
  return hfa::relation_kind_from_tag(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact algebra of hesitant fuzzy sets: relations, operations, ranking and law checking"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hfa 0.1.0");

  std::string file, a, b, expr, set, kind = "m", dot, csv, output, set_name = "H", law, report;
  bool json = false, timing = false;
  std::optional<std::string> law_filter;

  auto* relate = app.add_subcommand("relate", "Compare two sets under every inclusion relation");
  relate->add_option("file", file, "Document")->required()->check(CLI::ExistingFile);
  relate->add_option("A", a, "First set")->required();
  relate->add_option("B", b, "Second set")->required();
  relate->add_flag("--json", json, "Structured output");

  auto* ops = app.add_subcommand("ops", "Evaluate an expression over ∪ ∩ ᶜ (also | & ' ~)");
  ops->add_option("file", file, "Document")->required()->check(CLI::ExistingFile);
  ops->add_option("expr", expr, "Expression, e.g. \"(A∪B)∩C\"")->required();
  ops->add_flag("--json", json, "Structured output");

  auto* rank = app.add_subcommand("rank", "Rank the elements of a set as decision schemes");
  rank->add_option("file", file, "Document")->required()->check(CLI::ExistingFile);
  rank->add_option("set", set, "Set whose elements are the schemes")->required();
  rank->add_option("--kind", kind, "Relation: p, a, m, s or n")->check(CLI::IsMember({"p", "a", "m", "s", "n", "t"}));
  rank->add_option("--dot", dot, "Write the strict order as a Graphviz file (- for standard output)");
  rank->add_flag("--json", json, "Structured output");

  auto* list = app.add_subcommand("laws", "List the encoded statements");
  list->add_flag("--json", json, "Structured output");

  hfa::CheckOptions check_opts;
  std::pair<std::size_t, std::size_t> universe_size{1, 4}, cardinality{1, 6}, family_size{1, 5};
  std::vector<std::string> laws;
  std::size_t threads = 1;
  auto* check = app.add_subcommand("check", "Run the law suite");
  check->add_option("--seed", check_opts.config.seed, "Random seed")->capture_default_str();
  check->add_option("--trials", check_opts.config.trials, "Guard-satisfying trials per proved law")
      ->capture_default_str();
  check->add_option("--grid", check_opts.config.degree_grid, "Degree grid denominator")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  check->add_option("--law", laws, "Restrict to these law ids (repeatable)");
  check->add_option("--report", report, "Write the JSON report to this file");
  check->add_option("--universe-size", universe_size, "MIN MAX universe size")->capture_default_str();
  check->add_option("--cardinality", cardinality, "MIN MAX membership cardinality")->capture_default_str();
  check->add_option("--family-size", family_size, "MIN MAX family size")->capture_default_str();
  check->add_option("--max-attempts", check_opts.config.max_attempts, "Rejection-sampling cap per trial")
      ->capture_default_str();
  check->add_option("--threads", threads, "Worker threads (0: all cores); output does not depend on it")
      ->capture_default_str();
  check->add_flag("--json", json, "Print the JSON report instead of the summary");
  check->add_flag("--timing", timing, "Include per-law elapsed time");

  std::optional<std::size_t> hunt;
  std::uint64_t hunt_seed = hfa::GeneratorConfig{}.seed;
  auto* counter = app.add_subcommand("counterexamples", "Replay refuted statements with full traces");
  counter->add_option("id", law_filter, "Law id (default: every refuted law)");
  counter->add_option("--hunt", hunt, "Also search this many random samples for a witness");
  counter->add_option("--seed", hunt_seed, "Seed for --hunt")->capture_default_str();

  auto* ingest = app.add_subcommand("ingest", "Build a document from scheme,expert,score rows");
  ingest->add_option("scores", csv, "Score table (- for standard input)")->required();
  ingest->add_option("-o,--output", output, "Document to write")->required();
  ingest->add_option("--set", set_name, "Name of the resulting set")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version exit 0; usage errors share the error status.
    return app.exit(e) == 0 ? hfa::kExitOk : hfa::kExitError;
  }

  try {
    if (*list) return hfa::cmd_laws(json, std::cout);
    if (*relate) return hfa::cmd_relate(hfa::load_document(file), a, b, json, std::cout);
    if (*ops) return hfa::cmd_ops(hfa::load_document(file), expr, json, std::cout);
    if (*rank) {
      std::optional<std::filesystem::path> dot_path;
      if (!dot.empty()) dot_path = dot;
      return hfa::cmd_rank(hfa::load_document(file), set, parse_kind(kind), json, dot_path, std::cout);
    }
    if (*check) {
      check_opts.config.universe_size = {universe_size.first, universe_size.second};
      check_opts.config.cardinality = {cardinality.first, cardinality.second};
      check_opts.config.family_size = {family_size.first, family_size.second};
      check_opts.run.only = laws;
      check_opts.run.threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
      if (!report.empty()) check_opts.report = report;
      check_opts.json = json;
      check_opts.timing = timing;
      return hfa::cmd_check(check_opts, std::cout, std::cerr);
    }
    if (*counter) return hfa::cmd_counterexamples(law_filter, hunt, hunt_seed, std::cout);
    if (*ingest) {
      if (csv == "-") return hfa::cmd_ingest(std::cin, output, set_name, std::cout);
      std::ifstream in(csv);
      if (!in) throw hfa::Error("cannot open '" + csv + "'");
      return hfa::cmd_ingest(in, output, set_name, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "hfa: " << e.what() << '\n';
    return hfa::kExitError;
  }
  return hfa::kExitError;
}
