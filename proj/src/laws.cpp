#include "hfa/laws.hpp"

#include "hfa/error.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace hfa {

// ---------------------------------------------------------------------------
// Random instances

void GeneratorConfig::validate() const {
  const auto check = [](SizeRange r, const char* what) {
    if (r.min < 1 || r.min > r.max)
      throw InvalidArgument(std::string(what) + " range [" + std::to_string(r.min) + ", " +
                            std::to_string(r.max) + "] must be non-empty with a minimum of at least 1");
  };
  check(universe_size, "universe size");
  check(cardinality, "cardinality");
  check(family_size, "family size");
  if (degree_grid < 1) throw InvalidArgument("degree grid denominator must be at least 1");
  if (max_attempts < 1) throw InvalidArgument("max_attempts must be at least 1");
}

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return engine_();  // full 64-bit range
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + x % span;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t stream_seed(std::uint64_t seed, std::string_view key, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(fnv1a(key) + 0x632be59bd9b4e019ULL * index));
}

Universe numbered_universe(std::size_t n) {
  static std::mutex mutex;
  static std::vector<std::optional<Universe>> cache;
  const auto build = [n] {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return Universe(std::move(names));
  };
  if (n > 64) return build();
  std::lock_guard lock(mutex);
  if (cache.size() <= n) cache.resize(n + 1);
  if (!cache[n]) cache[n] = build();
  return *cache[n];
}

Degree random_degree(Rng& rng, const GeneratorConfig& config, Degree lo) {
  const auto d = config.degree_grid;
  // smallest k with k/d >= lo
  const __int128 scaled = static_cast<__int128>(lo.numerator()) * d;
  const auto k_lo = static_cast<std::int64_t>((scaled + lo.denominator() - 1) / lo.denominator());
  const auto k = static_cast<std::int64_t>(rng.uniform(static_cast<std::uint64_t>(k_lo), static_cast<std::uint64_t>(d)));
  return Degree::from_fraction(k, d);
}

Hfe random_hfe(Rng& rng, const GeneratorConfig& config, SizeRange cardinality) {
  const std::size_t n = rng.pick(cardinality);
  std::vector<Degree> values;
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) values.push_back(random_degree(rng, config));
  return Hfe(std::move(values));
}

Hfs random_hfs(Rng& rng, const GeneratorConfig& config, const Universe& universe) {
  std::vector<Hfe> memberships;
  memberships.reserve(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) memberships.push_back(random_hfe(rng, config, config.cardinality));
  return Hfs(universe, std::move(memberships));
}

Hfs random_hfs(const GeneratorConfig& config, std::uint64_t stream_index) {
  config.validate();
  Rng rng(stream_seed(config.seed, "random_hfs", stream_index));
  const Universe universe = numbered_universe(rng.pick(config.universe_size));
  return random_hfs(rng, config, universe);
}

// ---------------------------------------------------------------------------
// Predicates

struct Predicate::Node {
  virtual ~Node() = default;
  virtual bool eval(const Binding& b) const = 0;
  virtual std::string text() const = 0;
  virtual void terms(std::vector<Expr>& out) const = 0;
  virtual void explain_detail(const Binding&, std::ostream&, int /*indent*/) const {}
  virtual std::vector<const Node*> children() const { return {}; }
};

bool Predicate::eval(const Binding& binding) const { return node_->eval(binding); }
std::string Predicate::text() const { return node_->text(); }

std::vector<Expr> Predicate::terms() const {
  std::vector<Expr> out;
  node_->terms(out);
  return out;
}

namespace {

using Node = Predicate::Node;

void pad(std::ostream& out, int indent) { out << std::string(static_cast<std::size_t>(indent), ' '); }

void add_term(std::vector<Expr>& out, const Expr& e) {
  const std::string key = e.to_string();
  for (const Expr& existing : out)
    if (existing.to_string() == key) return;
  out.push_back(e);
}

void explain_node(const Node& node, const Binding& b, std::ostream& out, int indent) {
  pad(out, indent);
  out << node.text() << ": " << (node.eval(b) ? "true" : "false") << '\n';
  node.explain_detail(b, out, indent + 4);
  for (const Node* child : node.children()) explain_node(*child, b, out, indent + 2);
}

std::string eq_symbol(RelationKind kind) {
  std::string s(symbol(kind));
  return "=" + s.substr(std::string("⊂").size());
}

std::string atom_text(const dsl::Atom& a) {
  const std::string rel = a.kind ? std::string(symbol(*a.kind)) : std::string("⊂ₛₒₜ");
  return a.lhs.to_string() + " " + rel + " " + a.rhs.to_string();
}

bool atom_holds(const dsl::Atom& a, const Hfe& l, const Hfe& r) {
  if (a.kind) return element_relation(*a.kind, l, r);
  return classify_sot(l, r) != SotVerdict::none;
}

std::string atom_detail(const dsl::Atom& a, const Hfe& l, const Hfe& r) {
  if (a.kind) return atom_holds(a, l, r) ? "true" : "false";
  return std::string(to_string(classify_sot(l, r)));
}

struct ConstNode final : Node {
  bool eval(const Binding&) const override { return true; }
  std::string text() const override { return "true"; }
  void terms(std::vector<Expr>&) const override {}
};

struct PointwiseNode final : Node {
  std::vector<dsl::Atom> atoms;

  bool eval(const Binding& b) const override {
    std::vector<std::pair<Hfs, Hfs>> values;
    values.reserve(atoms.size());
    for (const auto& a : atoms) values.emplace_back(a.lhs.eval(b), a.rhs.eval(b));
    const std::size_t n = values.front().first.universe().size();
    for (std::size_t i = 0; i < n; ++i) {
      bool any = false;
      for (std::size_t k = 0; k < atoms.size() && !any; ++k)
        any = atom_holds(atoms[k], values[k].first.at(i), values[k].second.at(i));
      if (!any) return false;
    }
    return true;
  }

  std::string text() const override {
    if (atoms.size() == 1) return atom_text(atoms.front());
    std::string out = "∀x: ";
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      if (k) out += " or ";
      out += atom_text(atoms[k]) + " at x";
    }
    return out;
  }

  void terms(std::vector<Expr>& out) const override {
    for (const auto& a : atoms) add_term(out, a.lhs), add_term(out, a.rhs);
  }

  void explain_detail(const Binding& b, std::ostream& out, int indent) const override {
    for (const auto& a : atoms) {
      const Hfs l = a.lhs.eval(b);
      const Hfs r = a.rhs.eval(b);
      pad(out, indent);
      if (atoms.size() > 1) out << atom_text(a) << " ";
      out << "per element:";
      for (std::size_t i = 0; i < l.universe().size(); ++i)
        out << ' ' << l.universe()[i] << '=' << atom_detail(a, l.at(i), r.at(i));
      out << '\n';
    }
  }
};

struct EqNode final : Node {
  RelationKind kind;
  Expr lhs, rhs;

  EqNode(RelationKind k, Expr l, Expr r) : kind(k), lhs(std::move(l)), rhs(std::move(r)) {}

  bool eval(const Binding& b) const override { return set_equality(kind, lhs.eval(b), rhs.eval(b)); }
  std::string text() const override { return lhs.to_string() + " " + eq_symbol(kind) + " " + rhs.to_string(); }
  void terms(std::vector<Expr>& out) const override { add_term(out, lhs), add_term(out, rhs); }
  void explain_detail(const Binding& b, std::ostream& out, int indent) const override {
    const Hfs l = lhs.eval(b), r = rhs.eval(b);
    pad(out, indent);
    out << "per element (⊂ / ⊃):";
    for (std::size_t i = 0; i < l.universe().size(); ++i)
      out << ' ' << l.universe()[i] << '=' << (element_relation(kind, l.at(i), r.at(i)) ? 'y' : 'n') << '/'
          << (element_relation(kind, r.at(i), l.at(i)) ? 'y' : 'n');
    out << '\n';
  }
};

// Degrees present in `a` more often than in `b` (both descending).
std::vector<Degree> multiset_minus(const Hfe& a, const Hfe& b) {
  std::vector<Degree> out;
  std::set_difference(a.degrees().begin(), a.degrees().end(), b.degrees().begin(), b.degrees().end(),
                      std::back_inserter(out), std::greater<>{});
  return out;
}

std::string degree_list(const std::vector<Degree>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + "}";
}

struct SameNode final : Node {
  Expr lhs, rhs;

  SameNode(Expr l, Expr r) : lhs(std::move(l)), rhs(std::move(r)) {}

  bool eval(const Binding& b) const override { return lhs.eval(b) == rhs.eval(b); }
  std::string text() const override { return lhs.to_string() + " = " + rhs.to_string(); }
  void terms(std::vector<Expr>& out) const override { add_term(out, lhs), add_term(out, rhs); }
  void explain_detail(const Binding& b, std::ostream& out, int indent) const override {
    const Hfs l = lhs.eval(b), r = rhs.eval(b);
    for (std::size_t i = 0; i < l.universe().size(); ++i) {
      if (l.at(i) == r.at(i)) continue;
      pad(out, indent);
      out << l.universe()[i] << ": only on the left " << degree_list(multiset_minus(l.at(i), r.at(i)))
          << ", only on the right " << degree_list(multiset_minus(r.at(i), l.at(i))) << '\n';
    }
  }
};

struct AllDegreesEqualNode final : Node {
  Expr lhs, rhs;

  AllDegreesEqualNode(Expr l, Expr r) : lhs(std::move(l)), rhs(std::move(r)) {}

  bool eval(const Binding& b) const override {
    const Hfs l = lhs.eval(b), r = rhs.eval(b);
    require_same_universe(l.universe(), r.universe());
    for (std::size_t i = 0; i < l.universe().size(); ++i) {
      const Hfe &x = l.at(i), &y = r.at(i);
      if (!x.is_constant() || !y.is_constant() || x.upper() != y.upper()) return false;
    }
    return true;
  }
  std::string text() const override {
    return "∀x: every degree of " + lhs.to_string() + "(x) equals every degree of " + rhs.to_string() + "(x)";
  }
  void terms(std::vector<Expr>& out) const override { add_term(out, lhs), add_term(out, rhs); }
};

struct MembersNode final : Node {
  enum class Quantifier { all, some };
  Quantifier quantifier;
  RelationKind kind;
  Expr lhs;
  std::string family;

  MembersNode(Quantifier q, RelationKind k, Expr l, std::string f)
      : quantifier(q), kind(k), lhs(std::move(l)), family(std::move(f)) {}

  bool eval(const Binding& b) const override {
    const Hfs l = lhs.eval(b);
    const auto members = b.family(family).members();
    const auto test = [&](const Family::Member& m) { return set_relation(kind, l, m.second); };
    return quantifier == Quantifier::all ? std::all_of(members.begin(), members.end(), test)
                                         : std::any_of(members.begin(), members.end(), test);
  }
  std::string text() const override {
    return lhs.to_string() + " " + std::string(symbol(kind)) + " H for " +
           (quantifier == Quantifier::all ? "every" : "some") + " H in " + family;
  }
  void terms(std::vector<Expr>& out) const override { add_term(out, lhs); }
  void explain_detail(const Binding& b, std::ostream& out, int indent) const override {
    const Hfs l = lhs.eval(b);
    pad(out, indent);
    out << "per member:";
    for (const auto& [name, set] : b.family(family).members())
      out << ' ' << name << '=' << (set_relation(kind, l, set) ? "true" : "false");
    out << '\n';
  }
};

struct ShorterNode final : Node {
  Expr set;
  std::string family;

  ShorterNode(Expr s, std::string f) : set(std::move(s)), family(std::move(f)) {}

  bool eval(const Binding& b) const override {
    const Hfs s = set.eval(b);
    for (const auto& [name, member] : b.family(family).members()) {
      require_same_universe(s.universe(), member.universe());
      for (std::size_t i = 0; i < s.universe().size(); ++i)
        if (s.at(i).size() >= member.at(i).size()) return false;
    }
    return true;
  }
  std::string text() const override {
    return "|" + set.to_string() + "(x)| < |H(x)| for every H in " + family + " and every x";
  }
  void terms(std::vector<Expr>& out) const override { add_term(out, set); }
};

struct SubfamilyNode final : Node {
  std::string sub, super;

  SubfamilyNode(std::string a, std::string b) : sub(std::move(a)), super(std::move(b)) {}

  bool eval(const Binding& b) const override { return is_subfamily(b.family(sub), b.family(super)); }
  std::string text() const override { return sub + " ⊏ " + super; }
  void terms(std::vector<Expr>&) const override {}
};

struct CustomNode final : Node {
  std::string description;
  std::vector<Expr> exprs;
  std::function<bool(const Binding&)> fn;

  bool eval(const Binding& b) const override { return fn(b); }
  std::string text() const override { return description; }
  void terms(std::vector<Expr>& out) const override {
    for (const auto& e : exprs) add_term(out, e);
  }
};

struct LogicNode final : Node {
  enum class Op { and_, or_, not_, implies, iff };
  Op op;
  std::shared_ptr<const Node> a, b;

  bool eval(const Binding& x) const override {
    switch (op) {
      case Op::and_: return a->eval(x) && b->eval(x);
      case Op::or_: return a->eval(x) || b->eval(x);
      case Op::not_: return !a->eval(x);
      case Op::implies: return !a->eval(x) || b->eval(x);
      case Op::iff: return a->eval(x) == b->eval(x);
    }
    return false;
  }
  std::string text() const override {
    switch (op) {
      case Op::and_: return "(" + a->text() + ") and (" + b->text() + ")";
      case Op::or_: return "(" + a->text() + ") or (" + b->text() + ")";
      case Op::not_: return "not (" + a->text() + ")";
      case Op::implies: return "(" + a->text() + ") ⇒ (" + b->text() + ")";
      case Op::iff: return "(" + a->text() + ") ⇔ (" + b->text() + ")";
    }
    return "?";
  }
  void terms(std::vector<Expr>& out) const override {
    a->terms(out);
    if (b) b->terms(out);
  }
  std::vector<const Node*> children() const override {
    if (b) return {a.get(), b.get()};
    return {a.get()};
  }
};

template <typename T>
Predicate wrap(T node) {
  return Predicate(std::make_shared<const T>(std::move(node)));
}

Predicate logic(LogicNode::Op op, const Predicate& a, const Predicate* b) {
  LogicNode n;
  n.op = op;
  n.a = a.node();
  if (b) n.b = b->node();
  return wrap(std::move(n));
}

}  // namespace

void Predicate::explain(const Binding& binding, std::ostream& out, int indent) const {
  explain_node(*node_, binding, out, indent);
}

namespace dsl {

Atom at(RelationKind kind, std::string_view lhs, std::string_view rhs) {
  return Atom{kind, Expr::parse(lhs), Expr::parse(rhs)};
}

Atom at_sot(std::string_view lhs, std::string_view rhs) {
  return Atom{std::nullopt, Expr::parse(lhs), Expr::parse(rhs)};
}

Predicate always() { return wrap(ConstNode{}); }

Predicate pointwise_any(std::vector<Atom> atoms) {
  if (atoms.empty()) throw InvalidArgument("pointwise_any needs at least one atom");
  PointwiseNode n;
  n.atoms = std::move(atoms);
  return wrap(std::move(n));
}

Predicate rel(RelationKind kind, std::string_view lhs, std::string_view rhs) {
  return pointwise_any({at(kind, lhs, rhs)});
}

Predicate sot(std::string_view lhs, std::string_view rhs) { return pointwise_any({at_sot(lhs, rhs)}); }

Predicate eq(RelationKind kind, std::string_view lhs, std::string_view rhs) {
  if (kind == RelationKind::truncated) throw InvalidArgument("the truncated relation has no equality");
  return wrap(EqNode(kind, Expr::parse(lhs), Expr::parse(rhs)));
}

Predicate same(std::string_view lhs, std::string_view rhs) {
  return wrap(SameNode(Expr::parse(lhs), Expr::parse(rhs)));
}

Predicate all_degrees_equal(std::string_view lhs, std::string_view rhs) {
  return wrap(AllDegreesEqualNode(Expr::parse(lhs), Expr::parse(rhs)));
}

Predicate for_all_members(RelationKind kind, std::string_view lhs, std::string_view family) {
  return wrap(MembersNode(MembersNode::Quantifier::all, kind, Expr::parse(lhs), std::string(family)));
}

Predicate for_some_member(RelationKind kind, std::string_view lhs, std::string_view family) {
  return wrap(MembersNode(MembersNode::Quantifier::some, kind, Expr::parse(lhs), std::string(family)));
}

Predicate shorter_than_all_members(std::string_view set, std::string_view family) {
  return wrap(ShorterNode(Expr::parse(set), std::string(family)));
}

Predicate subfamily(std::string_view sub, std::string_view super) {
  return wrap(SubfamilyNode(std::string(sub), std::string(super)));
}

Predicate custom(std::string text, std::vector<std::string> terms, std::function<bool(const Binding&)> fn) {
  CustomNode n;
  n.description = std::move(text);
  for (const auto& t : terms) n.exprs.push_back(Expr::parse(t));
  n.fn = std::move(fn);
  return wrap(std::move(n));
}

Predicate operator&&(Predicate a, Predicate b) { return logic(LogicNode::Op::and_, a, &b); }
Predicate operator||(Predicate a, Predicate b) { return logic(LogicNode::Op::or_, a, &b); }
Predicate operator!(Predicate a) { return logic(LogicNode::Op::not_, a, nullptr); }
Predicate implies(Predicate premise, Predicate conclusion) {
  return logic(LogicNode::Op::implies, premise, &conclusion);
}
Predicate iff(Predicate a, Predicate b) { return logic(LogicNode::Op::iff, a, &b); }

}  // namespace dsl

// ---------------------------------------------------------------------------
// Laws

std::string_view to_string(LawStatus status) noexcept {
  return status == LawStatus::proved ? "proved" : "refuted";
}

const Law& find_law(std::string_view id) {
  for (const Law& law : law_registry())
    if (law.id == id) return law;
  throw InvalidArgument("unknown law id '" + std::string(id) + "'");
}

Verdict evaluate_law(const Law& law, const Binding& binding) {
  for (const auto& name : law.set_vars) (void)binding.set(name);
  for (const auto& name : law.family_vars) (void)binding.family(name);
  (void)binding.universe();
  return Verdict{law.guard.eval(binding), law.claim.eval(binding)};
}

bool LawResult::passed() const noexcept {
  if (status == LawStatus::proved) {
    return violations == 0 &&
           std::none_of(fixtures.begin(), fixtures.end(), [](const FixtureResult& f) { return f.verdict.violated(); });
  }
  return !fixtures.empty() &&
         std::all_of(fixtures.begin(), fixtures.end(), [](const FixtureResult& f) { return f.verdict.violated(); });
}

bool LawReport::passed() const noexcept {
  return std::all_of(results.begin(), results.end(), [](const LawResult& r) { return r.passed(); });
}

std::size_t LawReport::count(LawStatus status) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [&](const LawResult& r) { return r.status == status; }));
}

std::size_t LawReport::total_violations() const noexcept {
  std::size_t total = 0;
  for (const auto& r : results) total += r.violations;
  return total;
}

namespace {

LawResult run_law(const Law& law, const GeneratorConfig& config, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  LawResult result;
  result.id = law.id;
  result.status = law.status;
  for (const Fixture& f : law.fixtures) result.fixtures.push_back({f.name, evaluate_law(law, f.binding)});

  if (law.status == LawStatus::proved) {
    for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
      Rng rng(stream_seed(config.seed, law.id, trial));
      bool accepted = false;
      for (std::size_t attempt = 0; attempt < config.max_attempts && !accepted; ++attempt) {
        Binding binding = law.sampler(rng, config);
        const Verdict v = evaluate_law(law, binding);
        if (!v.guard) continue;
        accepted = true;
        ++result.trials;
        if (!v.claim) {
          ++result.violations;
          if (result.witnesses.size() < options.max_witnesses)
            result.witnesses.push_back(Witness{law.id, trial, std::move(binding), v});
        }
      }
      if (!accepted) ++result.starved;
    }
  }
  result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

LawReport run_suite(const GeneratorConfig& config, const RunOptions& options) {
  config.validate();
  std::vector<const Law*> selected;
  if (options.only.empty()) {
    for (const Law& law : law_registry()) selected.push_back(&law);
  } else {
    for (const auto& id : options.only) selected.push_back(&find_law(id));
  }

  LawReport report;
  report.config = config;
  report.results.resize(selected.size());

  const std::size_t workers = std::max<std::size_t>(1, std::min(options.threads, selected.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) report.results[i] = run_law(*selected[i], config, options);
    return report;
  }

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) {
          try {
            report.results[i] = run_law(*selected[i], config, options);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  return report;
}

std::optional<Witness> hunt_counterexample(std::string_view law_id, const GeneratorConfig& config) {
  const Law& law = find_law(law_id);
  config.validate();
  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    Rng rng(stream_seed(config.seed, "hunt:" + law.id, trial));
    Binding binding = law.sampler(rng, config);
    const Verdict v = evaluate_law(law, binding);
    if (v.violated()) return Witness{law.id, trial, std::move(binding), v};
  }
  return std::nullopt;
}

namespace {

void write_membership(const Hfe& h, std::ostream& out) {
  const Rational m = mean(h);
  out << h.to_string() << "  bounds [" << h.lower().to_string() << ", " << h.upper().to_string() << "]  mean "
      << to_fraction_string(m) << " ≈ " << to_decimal_string(m) << '\n';
}

void write_set(const std::string& label, const Hfs& set, std::ostream& out, int indent) {
  pad(out, indent);
  out << label << '\n';
  for (std::size_t i = 0; i < set.universe().size(); ++i) {
    pad(out, indent + 2);
    out << set.universe()[i] << ": ";
    write_membership(set.at(i), out);
  }
}

}  // namespace

void write_trace(const Law& law, const Binding& binding, std::ostream& out) {
  out << "law " << law.id << " [" << to_string(law.status) << "]\n";
  out << "  statement: " << law.statement << '\n';
  out << "  binding:\n";
  for (const auto& [name, set] : binding.sets()) write_set(name, set, out, 4);
  for (const auto& [name, family] : binding.families())
    for (const auto& [member, set] : family.members()) write_set(name + "." + member, set, out, 4);

  std::vector<Expr> terms = law.guard.terms();
  for (const Expr& e : law.claim.terms()) add_term(terms, e);
  bool header = false;
  for (const Expr& e : terms) {
    const std::string label = e.to_string();
    if (binding.find_set(label) != nullptr) continue;  // already listed
    if (!header) out << "  derived:\n", header = true;
    write_set(label, e.eval(binding), out, 4);
  }

  const Verdict v = evaluate_law(law, binding);
  if (law.guard.text() == "true") {
    out << "  guard: none\n";
  } else {
    out << "  guard:\n";
    law.guard.explain(binding, out, 4);
  }
  out << "  claim:\n";
  law.claim.explain(binding, out, 4);
  out << "  verdict: "
      << (v.violated() ? "claim falsified under a satisfied guard" : v.guard ? "claim holds" : "guard not satisfied")
      << '\n';
}

}  // namespace hfa
