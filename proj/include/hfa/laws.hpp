#pragma once

#include "hfa/binding.hpp"
#include "hfa/expr.hpp"
#include "hfa/relations.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace hfa {

// ---------------------------------------------------------------------------
// Random instances

struct SizeRange {
  std::size_t min = 1;
  std::size_t max = 1;
};

struct GeneratorConfig {
  std::uint64_t seed = 20240917;
  SizeRange universe_size{1, 4};
  SizeRange cardinality{1, 6};
  SizeRange family_size{1, 5};
  /// Degrees are drawn from {0, 1/d, ..., d/d}.
  std::int64_t degree_grid = 100;
  /// Guard-satisfying trials per proved law (samples per hunt).
  std::size_t trials = 10'000;
  /// Rejection-sampling cap per accepted binding.
  std::size_t max_attempts = 1'000;

  /// Throws InvalidArgument for empty ranges, a zero minimum, or d < 1.
  void validate() const;
};

/// Deterministic generator. mt19937_64 has a fully specified output sequence;
/// bounded draws avoid std::uniform_int_distribution, whose mapping is
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  std::size_t pick(SizeRange r) { return static_cast<std::size_t>(uniform(r.min, r.max)); }
  bool chance(std::uint64_t numerator, std::uint64_t denominator) {
    return uniform(0, denominator - 1) < numerator;
  }

 private:
  std::mt19937_64 engine_;
};

/// Seed of the independent stream `index` under key `key`.
std::uint64_t stream_seed(std::uint64_t seed, std::string_view key, std::uint64_t index);

/// Universe {x1, ..., xn}; copies for the same n share storage.
Universe numbered_universe(std::size_t n);

/// A grid degree uniform in [lo, 1].
Degree random_degree(Rng& rng, const GeneratorConfig& config, Degree lo = Degree::zero());
Hfe random_hfe(Rng& rng, const GeneratorConfig& config, SizeRange cardinality);
Hfs random_hfs(Rng& rng, const GeneratorConfig& config, const Universe& universe);

/// Deterministic in (config.seed, stream_index).
Hfs random_hfs(const GeneratorConfig& config, std::uint64_t stream_index);

// ---------------------------------------------------------------------------
// Predicates

/// Explainable boolean formula over a Binding.
class Predicate {
 public:
  struct Node;

  Predicate() = default;
  explicit Predicate(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  bool eval(const Binding& binding) const;
  std::string text() const;
  /// Expressions mentioned, in first-use order, for evaluation traces.
  std::vector<Expr> terms() const;
  /// Writes the formula tree with each node's verdict; leaves also list the
  /// per-element verdicts.
  void explain(const Binding& binding, std::ostream& out, int indent = 0) const;

  const std::shared_ptr<const Node>& node() const noexcept { return node_; }

 private:
  std::shared_ptr<const Node> node_;
};

/// Building blocks for law definitions. Expression arguments use the `Expr`
/// grammar.
namespace dsl {

/// One pointwise comparison L(x) ⊂k R(x); `kind` empty means ⊂ₛₒₜ.
struct Atom {
  std::optional<RelationKind> kind;
  Expr lhs;
  Expr rhs;
};

Atom at(RelationKind kind, std::string_view lhs, std::string_view rhs);
Atom at_sot(std::string_view lhs, std::string_view rhs);

Predicate always();
/// For every x, at least one atom holds at x.
Predicate pointwise_any(std::vector<Atom> atoms);
/// L ⊂k R at every element.
Predicate rel(RelationKind kind, std::string_view lhs, std::string_view rhs);
/// L(x) ⊂ₛ R(x) or L(x) ⊂ₜ R(x) at every element.
Predicate sot(std::string_view lhs, std::string_view rhs);
/// L =k R (mutual inclusion).
Predicate eq(RelationKind kind, std::string_view lhs, std::string_view rhs);
/// L = R as multiset-valued sets.
Predicate same(std::string_view lhs, std::string_view rhs);
/// Every degree of L(x) equals every degree of R(x), for every x.
Predicate all_degrees_equal(std::string_view lhs, std::string_view rhs);
/// lhs ⊂k H for every member H of `family`.
Predicate for_all_members(RelationKind kind, std::string_view lhs, std::string_view family);
/// lhs ⊂k H for some member H of `family`.
Predicate for_some_member(RelationKind kind, std::string_view lhs, std::string_view family);
/// |set(x)| < |H(x)| for every member H and element x.
Predicate shorter_than_all_members(std::string_view set, std::string_view family);
/// sub ⊏ super.
Predicate subfamily(std::string_view sub, std::string_view super);
/// Escape hatch for statements that do not decompose into the above.
Predicate custom(std::string text, std::vector<std::string> terms, std::function<bool(const Binding&)> fn);

Predicate operator&&(Predicate a, Predicate b);
Predicate operator||(Predicate a, Predicate b);
Predicate operator!(Predicate a);
Predicate implies(Predicate premise, Predicate conclusion);
Predicate iff(Predicate a, Predicate b);

}  // namespace dsl

// ---------------------------------------------------------------------------
// Laws

enum class LawStatus { proved, refuted };

std::string_view to_string(LawStatus status) noexcept;

struct Verdict {
  bool guard = false;
  bool claim = false;

  bool violated() const noexcept { return guard && !claim; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct Fixture {
  std::string name;
  Binding binding;
};

/// Builds a guard-candidate binding; the runner re-checks the guard.
using Sampler = std::function<Binding(Rng&, const GeneratorConfig&)>;

struct Law {
  std::string id;
  std::string statement;
  LawStatus status = LawStatus::proved;
  std::vector<std::string> set_vars;
  std::vector<std::string> family_vars;
  Predicate guard;
  Predicate claim;
  Sampler sampler;
  std::vector<Fixture> fixtures;

  std::size_t arity() const noexcept { return set_vars.size() + family_vars.size(); }
};

/// Every encoded statement, in a stable order.
const std::vector<Law>& law_registry();

/// Throws InvalidArgument for an unknown id.
const Law& find_law(std::string_view id);

/// Throws InvalidArgument when a variable of the law is unbound and
/// UniverseMismatch when bound values disagree on the universe.
Verdict evaluate_law(const Law& law, const Binding& binding);

struct Witness {
  std::string law_id;
  std::uint64_t trial = 0;
  Binding binding;
  Verdict verdict;
};

struct FixtureResult {
  std::string name;
  Verdict verdict;
};

struct LawResult {
  std::string id;
  LawStatus status = LawStatus::proved;
  std::size_t trials = 0;      ///< guard-satisfying random trials evaluated
  std::size_t starved = 0;     ///< trials abandoned after max_attempts
  std::size_t violations = 0;  ///< guard true, claim false
  std::vector<Witness> witnesses;  ///< first few violations, by trial index
  std::vector<FixtureResult> fixtures;
  double elapsed_seconds = 0.0;

  /// Proved: no violation anywhere. Refuted: every fixture falsifies the claim.
  bool passed() const noexcept;
};

struct LawReport {
  GeneratorConfig config;
  std::vector<LawResult> results;

  bool passed() const noexcept;
  std::size_t count(LawStatus status) const noexcept;
  std::size_t total_violations() const noexcept;
};

struct RunOptions {
  /// Restrict to these ids; empty runs everything. Unknown ids throw.
  std::vector<std::string> only;
  /// Worker threads; results do not depend on this.
  std::size_t threads = 1;
  std::size_t max_witnesses = 3;
};

LawReport run_suite(const GeneratorConfig& config, const RunOptions& options = {});

/// First violating binding within `config.trials` samples, if any.
/// Throws InvalidArgument for an unknown id.
std::optional<Witness> hunt_counterexample(std::string_view law_id, const GeneratorConfig& config);

/// Memberships, bounds and means of every term at every element, followed by
/// the guard and claim breakdown.
void write_trace(const Law& law, const Binding& binding, std::ostream& out);

}  // namespace hfa
