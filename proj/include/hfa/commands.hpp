#pragma once

#include "hfa/document.hpp"
#include "hfa/laws.hpp"
#include "hfa/relations.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace hfa {

/// Exit statuses shared by every command.
enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitError = 2 };

/// Every registered law: id, status and statement.
int cmd_laws(bool json, std::ostream& out);

/// Per-element relation profiles of A against B, then set-level inclusion and
/// equality verdicts.
int cmd_relate(const Document& doc, std::string_view a, std::string_view b, bool json, std::ostream& out);

/// Evaluates an expression; text output lists memberships, bounds and means.
int cmd_ops(const Document& doc, std::string_view expr, bool json, std::ostream& out);

/// With `dot` set to "-", prints only the Graphviz digraph.
int cmd_rank(const Document& doc, std::string_view set, RelationKind kind, bool json,
             const std::optional<std::filesystem::path>& dot, std::ostream& out);

struct CheckOptions {
  GeneratorConfig config;
  RunOptions run;
  std::optional<std::filesystem::path> report;
  /// Print the JSON report instead of the per-law summary.
  bool json = false;
  bool timing = false;
};

/// Fails when a proved law has a violation or a refuted law's fixture does
/// not falsify it. Starved trials are warnings.
int cmd_check(const CheckOptions& options, std::ostream& out, std::ostream& err);

/// Replays the fixtures of one law, or of every refuted law, with full
/// traces. With `hunt_trials`, also searches for a fresh random witness.
int cmd_counterexamples(const std::optional<std::string>& law_id, const std::optional<std::size_t>& hunt_trials,
                        std::uint64_t seed, std::ostream& out);

int cmd_ingest(std::istream& scores, const std::filesystem::path& output, const std::string& set_name,
               std::ostream& out);

}  // namespace hfa
