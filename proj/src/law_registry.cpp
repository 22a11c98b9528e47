#include "hfa/degree.hpp"
#include "hfa/error.hpp"
#include "hfa/laws.hpp"

#include <algorithm>
#include <array>

namespace hfa {
namespace {

using namespace dsl;
using K = RelationKind;
constexpr K P = K::possible;
constexpr K A_ = K::acceptable;
constexpr K M = K::mean;
constexpr K S = K::strong;
constexpr K T = K::truncated;
constexpr K N = K::necessary;

// ---------------------------------------------------------------------------
// Constructive samplers. A plan draws a universe, then runs its steps in
// order against one binding.

struct Ctx {
  Rng& rng;
  const GeneratorConfig& cfg;
  Universe universe;
  Binding binding;
};

using Step = std::function<void(Ctx&)>;
using Mode = std::optional<K>;  // empty: ⊂ₛₒₜ
constexpr Mode kSot = std::nullopt;

Sampler plan(std::vector<Step> steps) {
  return [steps = std::move(steps)](Rng& rng, const GeneratorConfig& cfg) {
    Ctx ctx{rng, cfg, numbered_universe(rng.pick(cfg.universe_size)), Binding{}};
    for (const Step& step : steps) step(ctx);
    return std::move(ctx.binding);
  };
}

SizeRange shrunk(SizeRange r, std::size_t by) {
  return {r.min, std::max(r.min, r.max > by ? r.max - by : r.min)};
}

Hfs map_elements(Ctx& c, const Hfs& base, const std::function<Hfe(const Hfe&)>& fn) {
  std::vector<Hfe> out;
  out.reserve(base.universe().size());
  for (const Hfe& h : base.memberships()) out.push_back(fn(h));
  return Hfs(c.universe, std::move(out));
}

Hfs fresh_hfs(Ctx& c, SizeRange card) {
  std::vector<Hfe> out;
  out.reserve(c.universe.size());
  for (std::size_t i = 0; i < c.universe.size(); ++i) out.push_back(random_hfe(c.rng, c.cfg, card));
  return Hfs(c.universe, std::move(out));
}

// A grid degree >= lo; sometimes exactly lo so that ties get exercised.
Degree at_least(Ctx& c, Degree lo) { return c.rng.chance(1, 8) ? lo : random_degree(c.rng, c.cfg, lo); }

std::size_t argmax(const std::vector<Degree>& v) {
  return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

std::vector<Degree> random_values(Ctx& c, std::size_t n) {
  std::vector<Degree> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_degree(c.rng, c.cfg));
  return v;
}

// An HFE b with a ⊂mode b whenever the cardinality range allows it.
Hfe related(Ctx& c, Mode mode, const Hfe& a) {
  const SizeRange card = c.cfg.cardinality;
  const bool strong_ok = card.min <= a.size();
  const bool truncated_ok = a.size() + 1 <= card.max;
  if (!mode) {
    if (strong_ok && truncated_ok) mode = c.rng.chance(1, 2) ? S : T;
    else if (strong_ok) mode = S;
    else if (truncated_ok) mode = T;
    else return random_hfe(c.rng, c.cfg, card);
  }
  std::vector<Degree> v;
  switch (*mode) {
    case K::possible: {
      v = random_values(c, c.rng.pick(card));
      Degree& top = v[argmax(v)];
      if (top < a.upper()) top = at_least(c, a.upper());
      break;
    }
    case K::acceptable: {
      const std::size_t n = c.rng.pick(card);
      for (std::size_t i = 0; i < n; ++i) v.push_back(at_least(c, a.lower()));
      Degree& top = v[argmax(v)];
      if (top < a.upper()) top = at_least(c, a.upper());
      break;
    }
    case K::mean: {
      for (int tries = 0; tries < 16; ++tries) {
        Hfe b = random_hfe(c.rng, c.cfg, card);
        if (compare_means(a, b) <= 0) return b;
      }
      const std::size_t n = c.rng.pick(card);
      for (std::size_t i = 0; i < n; ++i) v.push_back(at_least(c, a.upper()));
      break;
    }
    case K::strong: {
      if (!strong_ok) return random_hfe(c.rng, c.cfg, card);
      const std::size_t n = c.rng.uniform(card.min, std::min(a.size(), card.max));
      for (std::size_t i = 0; i < n; ++i) v.push_back(at_least(c, a[i]));
      break;
    }
    case K::truncated: {
      if (!truncated_ok) return random_hfe(c.rng, c.cfg, card);
      const std::size_t n = c.rng.uniform(std::max(card.min, a.size() + 1), card.max);
      for (std::size_t i = 0; i < a.size(); ++i) v.push_back(at_least(c, a[i]));
      while (v.size() < n) v.push_back(random_degree(c.rng, c.cfg));
      break;
    }
    case K::necessary: {
      const std::size_t n = c.rng.pick(card);
      for (std::size_t i = 0; i < n; ++i) v.push_back(at_least(c, a.upper()));
      break;
    }
  }
  return Hfe(std::move(v));
}

Hfs related_hfs(Ctx& c, Mode mode, const Hfs& base) {
  return map_elements(c, base, [&](const Hfe& a) { return related(c, mode, a); });
}

Step fresh(std::string name, std::size_t shrink = 0) {
  return [name = std::move(name), shrink](Ctx& c) {
    c.binding.set(name, fresh_hfs(c, shrunk(c.cfg.cardinality, shrink)));
  };
}

Step above(Mode mode, std::string base, std::string name) {
  return [=](Ctx& c) { c.binding.set(name, related_hfs(c, mode, c.binding.set(base))); };
}

Step copy(std::string name, std::string source) {
  return [=](Ctx& c) {
    Hfs s = c.binding.set(source);
    c.binding.set(name, std::move(s));
  };
}

// Two sets whose memberships are constant and equal degree by degree, with
// independent cardinalities.
Step constant_pair(std::string a, std::string b) {
  return [=](Ctx& c) {
    std::vector<Hfe> x, y;
    for (std::size_t i = 0; i < c.universe.size(); ++i) {
      const Degree d = random_degree(c.rng, c.cfg);
      x.emplace_back(std::vector<Degree>(c.rng.pick(c.cfg.cardinality), d));
      y.emplace_back(std::vector<Degree>(c.rng.pick(c.cfg.cardinality), d));
    }
    c.binding.set(a, Hfs(c.universe, std::move(x)));
    c.binding.set(b, Hfs(c.universe, std::move(y)));
  };
}

std::string member_name(std::size_t i) { return "H" + std::to_string(i + 1); }

enum class Which { all, one };

// Family of random members; with a relation mode, all members (or one) are
// built above `base`.
Step family(std::string name, std::optional<Mode> mode = {}, std::string base = {}, Which which = Which::all) {
  return [=](Ctx& c) {
    const std::size_t n = c.rng.pick(c.cfg.family_size);
    const std::size_t alpha = c.rng.uniform(0, n - 1);
    std::vector<Family::Member> members;
    for (std::size_t i = 0; i < n; ++i) {
      const bool build = mode && (which == Which::all || i == alpha);
      members.emplace_back(member_name(i), build ? related_hfs(c, *mode, c.binding.set(base))
                                                 : fresh_hfs(c, c.cfg.cardinality));
    }
    c.binding.set_family(name, Family(std::move(members)));
  };
}

// Members strictly longer than `base` everywhere, one of them ⊂ₜ-above it.
Step longer_family(std::string name, std::string base) {
  return [=](Ctx& c) {
    const Hfs& a = c.binding.set(base);
    const std::size_t n = c.rng.pick(c.cfg.family_size);
    const std::size_t alpha = c.rng.uniform(0, n - 1);
    std::vector<Family::Member> members;
    for (std::size_t i = 0; i < n; ++i) {
      Hfs h = i == alpha ? related_hfs(c, T, a) : map_elements(c, a, [&](const Hfe& e) {
        const SizeRange card{std::min(e.size() + 1, c.cfg.cardinality.max), c.cfg.cardinality.max};
        return random_hfe(c.rng, c.cfg, card);
      });
      members.emplace_back(member_name(i), std::move(h));
    }
    c.binding.set_family(name, Family(std::move(members)));
  };
}

// `super` random; `sub` a non-empty selection of its members, occasionally
// renamed.
Step subfamily_pair(std::string sub, std::string super) {
  return [=](Ctx& c) {
    const std::size_t n = c.rng.pick(c.cfg.family_size);
    std::vector<Family::Member> all;
    for (std::size_t i = 0; i < n; ++i) all.emplace_back(member_name(i), fresh_hfs(c, c.cfg.cardinality));
    std::vector<Family::Member> picked;
    for (const auto& m : all)
      if (c.rng.chance(1, 2)) picked.push_back(m);
    if (picked.empty()) picked.push_back(all[c.rng.uniform(0, n - 1)]);
    if (c.rng.chance(1, 4)) picked.front().first = "G1";
    c.binding.set_family(super, Family(std::move(all)));
    c.binding.set_family(sub, Family(std::move(picked)));
  };
}

Step either(std::vector<std::vector<Step>> branches) {
  return [branches = std::move(branches)](Ctx& c) {
    for (const Step& s : branches[c.rng.uniform(0, branches.size() - 1)]) s(c);
  };
}

// A ⊂mode B, extra independent sets after.
std::vector<Step> premise(Mode mode, std::vector<std::string> extra = {}) {
  std::vector<Step> steps{fresh("A", mode == T ? 1 : 0), above(mode, "A", "B")};
  for (auto& e : extra) steps.push_back(fresh(std::move(e)));
  return steps;
}

std::vector<Step> independent(const std::vector<std::string>& names) {
  std::vector<Step> steps;
  for (const auto& n : names) steps.push_back(fresh(n));
  return steps;
}

// ---------------------------------------------------------------------------
// Fixtures

using Row = std::vector<const char*>;

Hfe hfe_of(const Row& row) {
  std::vector<Degree> v;
  for (const char* s : row) v.push_back(parse_degree_exact(s));
  return Hfe(std::move(v));
}

Fixture fixture(std::string name, const std::vector<std::string>& elements,
                const std::vector<std::pair<std::string, std::vector<Row>>>& sets) {
  const Universe u(elements);
  Binding b;
  for (const auto& [set, rows] : sets) {
    std::vector<Hfe> m;
    for (const Row& r : rows) m.push_back(hfe_of(r));
    b.set(set, Hfs(u, std::move(m)));
  }
  return Fixture{std::move(name), std::move(b)};
}

Fixture expert_pair(const char* a_label, const Row& a, const char* b_label, const Row& b) {
  return fixture(std::string("expert scores ") + a_label + " vs " + b_label, {"x"}, {{"A", {a}}, {"B", {b}}});
}

const Row kX1{"0.9", "0.2"}, kX3{"0.7", "0.5", "0.5"}, kX4{"0.8", "0.6", "0.5"}, kX5{"0.9", "0.3", "0.1"},
    kX6{"0.9", "0.8", "0.7"};

Fixture mean_pair_fixture() {
  return fixture("two-set mean example", {"x", "y", "z"},
                 {{"A", {{"0.1", "0.8"}, {"0.1", "0.8"}, {"0.7", "0.9"}}},
                  {"B", {{"0.7", "0.9"}, {"0.1", "0.9"}, {"0.1", "0.8"}}}});
}

Fixture sot_meet_fixture() {
  return fixture("five-degree intersection example", {"x", "y"},
                 {{"A", {{"0.1", "0.2", "0.5", "0.6", "0.9"}, {"0.1", "0.7"}}},
                  {"B", {{"0.05", "0.3", "0.4", "0.7", "0.8"}, {"0.8", "0.9", "0.9"}}}});
}

Fixture interleaved_fixture() {
  return fixture("interleaved example", {"x"}, {{"A", {{"0.1", "0.3", "0.5"}}}, {"B", {{"0.2", "0.4", "0.6"}}}});
}

Fixture converse_fixture() {
  return fixture("truncated converse example", {"x"},
                 {{"A", {{"0.3", "0.5", "0.7"}}}, {"B", {{"0.8", "0.9"}}}, {"C", {{"0.6", "0.8", "0.9"}}}});
}

Fixture complement_fixture(bool at_x) {
  if (at_x)
    return fixture("complement example at x", {"x"}, {{"A", {{"0.4", "0.4"}}}, {"B", {{"0.1", "0.1", "0.41"}}}});
  return fixture("complement example at y", {"y"}, {{"A", {{"0.2", "0.25"}}}, {"B", {{"0.1", "0.2", "0.3"}}}});
}

Fixture absorption_fixture() {
  return fixture("equality example", {"x"},
                 {{"A", {{"0.1", "0.2", "0.3"}}}, {"B", {{"0.3", "0.4", "0.5"}}}, {"C", {{"0.3", "0.45", "0.5"}}}});
}

// Three sets over eight elements; each refutation uses the single element the
// statement concerns, since the premise need not hold elsewhere.
const std::array<std::array<Row, 3>, 8> kEightElements{{
    {Row{"0.2", "0.4"}, Row{"0.1", "0.1", "0.5"}, Row{"0.1", "0.2"}},
    {Row{"0.2", "0.5"}, Row{"0.1", "0.8"}, Row{"0.5"}},
    {Row{"0.3", "0.5"}, Row{"0.4", "0.41"}, Row{"0.45", "0.45"}},
    {Row{"0.5", "0.6"}, Row{"0.6", "0.7"}, Row{"0.7", "0.8"}},
    {Row{"0.6", "0.7"}, Row{"0.8", "0.9"}, Row{"0.1", "0.7"}},
    {Row{"0.3", "0.4"}, Row{"0.1", "0.1", "0.3", "0.5"}, Row{"0.3", "0.4"}},
    {Row{"0.3", "0.4"}, Row{"0.1", "0.1", "0.3", "0.5"}, Row{"0.1", "0.4"}},
    {Row{"0.3", "0.4"}, Row{"0.5", "0.8"}, Row{"0.8", "0.9"}},
}};

Fixture eight_element_fixture(std::size_t element) {
  const auto& rows = kEightElements.at(element - 1);
  return fixture("eight-element example at x" + std::to_string(element), {"x" + std::to_string(element)},
                 {{"A", {rows[0]}}, {"B", {rows[1]}}, {"C", {rows[2]}}});
}

// ---------------------------------------------------------------------------
// Registry

std::string statement_of(const Predicate& guard, const Predicate& claim) {
  const std::string g = guard.text();
  if (g == "true") return claim.text();
  return "if " + g + " then " + claim.text();
}

struct Registry {
  std::vector<Law> laws;

  Law& add(std::string id, LawStatus status, std::vector<std::string> sets, Predicate guard, Predicate claim,
           std::vector<Step> steps, std::vector<std::string> families = {}) {
    Law law;
    law.id = std::move(id);
    law.statement = statement_of(guard, claim);
    law.status = status;
    law.set_vars = std::move(sets);
    law.family_vars = std::move(families);
    law.guard = std::move(guard);
    law.claim = std::move(claim);
    law.sampler = plan(std::move(steps));
    laws.push_back(std::move(law));
    return laws.back();
  }

  Law& proved(std::string id, std::vector<std::string> sets, Predicate guard, Predicate claim,
              std::vector<Step> steps, std::vector<std::string> families = {}) {
    return add(std::move(id), LawStatus::proved, std::move(sets), std::move(guard), std::move(claim),
               std::move(steps), std::move(families));
  }

  Law& refuted(std::string id, std::vector<std::string> sets, Predicate guard, Predicate claim,
               std::vector<Step> steps, std::vector<Fixture> fixtures) {
    Law& law = add(std::move(id), LawStatus::refuted, std::move(sets), std::move(guard), std::move(claim),
                   std::move(steps));
    law.fixtures = std::move(fixtures);
    return law;
  }
};

const std::vector<std::string> kAB{"A", "B"};
const std::vector<std::string> kABC{"A", "B", "C"};

Predicate eq_pam(std::string_view l, std::string_view r) { return eq(P, l, r) && eq(A_, l, r) && eq(M, l, r); }

bool best_q_dominance(const Hfe& a, const Hfe& b) {
  const std::size_t q = std::min(a.size(), b.size());
  return dominates(best_q_subsequence(a, q).degrees(), best_q_subsequence(b, q).degrees());
}

void add_algebra(Registry& r) {
  const auto indep3 = independent(kABC);
  r.proved("thm1.1", {"A"}, always(), same("(Aᶜ)ᶜ", "A"), independent({"A"}));
  r.proved("thm1.2", kAB, always(), same("(A∩B)ᶜ", "Aᶜ∪Bᶜ"), independent(kAB));
  r.proved("thm1.3", kAB, always(), same("(A∪B)ᶜ", "Aᶜ∩Bᶜ"), independent(kAB));
  r.proved("thm1.4", kAB, always(), same("A∩B", "B∩A") && same("A∪B", "B∪A"), independent(kAB));
  r.proved("thm1.5", kABC, always(), same("(A∩B)∩C", "A∩(B∩C)") && same("(A∪B)∪C", "A∪(B∪C)"), indep3);
}

void add_implications(Registry& r) {
  struct Item {
    const char* id;
    K premise;
    std::optional<K> conclusion;  // empty: ⊂ₛₒₜ at every element
  };
  const Item items[] = {{"prop2.1", A_, P}, {"prop2.2", S, P}, {"prop2.3", S, A_},
                        {"prop2.4", S, M},  {"prop2.5", T, P}, {"prop2.6", N, P},
                        {"prop2.7", N, A_}, {"prop2.8", N, M}, {"prop2.9", N, std::nullopt}};
  for (const Item& it : items) {
    Predicate claim = it.conclusion ? rel(*it.conclusion, "A", "B") : sot("A", "B");
    Law& law = r.proved(it.id, kAB, rel(it.premise, "A", "B"), std::move(claim), premise(it.premise));
    if (law.id == "prop2.3") law.fixtures.push_back(expert_pair("x3", kX3, "x4", kX4));
    if (law.id == "prop2.5") law.fixtures.push_back(expert_pair("x1", kX1, "x5", kX5));
    if (law.id == "prop2.9") law.fixtures.push_back(expert_pair("x3", kX3, "x6", kX6));
  }
}

void add_pairs(Registry& r) {
  const auto ab = independent(kAB);
  for (K k : {P, A_}) {
    const std::string p = k == P ? "prop3." : "prop4.";
    r.proved(p + "1", kAB, always(), rel(k, "A∩B", "A") && rel(k, "A∩B", "B"), ab);
    r.proved(p + "2", kAB, always(), rel(k, "A", "A∪B") && rel(k, "B", "A∪B"), ab);
    r.proved(p + "3", kAB, always(), rel(k, "A∩B", "A∪B"), ab);
  }
  r.laws[r.laws.size() - 6].fixtures.push_back(mean_pair_fixture());

  Law& m1 = r.proved("prop5.1", kAB, always(), pointwise_any({at(M, "A∩B", "A"), at(M, "A∩B", "B")}), ab);
  m1.fixtures.push_back(mean_pair_fixture());
  Law& m2 = r.proved("prop5.2", kAB, always(), pointwise_any({at(M, "A", "A∪B"), at(M, "B", "A∪B")}), ab);
  m2.fixtures.push_back(mean_pair_fixture());
  r.proved("prop5.3", kAB, always(), rel(M, "A∩B", "A∪B"), ab);
  r.proved("prop5.4", kAB, rel(M, "A", "B"), rel(M, "A∩B", "B"), premise(M));
  r.proved("prop5.5", kAB, rel(M, "A", "B"), rel(M, "A", "A∪B"), premise(M));

  Law& s1 = r.proved("prop6.1", kAB, always(), sot("A", "A∪B") && sot("B", "A∪B"), ab);
  s1.fixtures.push_back(sot_meet_fixture());
  r.proved("prop6.2", kAB, always(), sot("A∩B", "A∪B"), ab);

  const std::pair<const char*, K> meet[] = {{"prop7.1", P}, {"prop7.2", A_}, {"prop7.3", S}, {"prop7.4", T},
                                            {"prop7.5", N}};
  for (const auto& [id, k] : meet) r.proved(id, kAB, rel(k, "A", "B"), sot("A", "A∩B"), premise(k));
  r.proved("prop7p.3", kAB, sot("A", "B"), sot("A", "A∩B"), premise(kSot));

  r.proved("prop8.1", kAB, rel(N, "A", "B"), rel(N, "A∩B", "B"), premise(N));
  r.proved("prop8.2", kAB, rel(N, "A", "B"), rel(N, "A", "A∪B"), premise(N));
  r.proved("prop8.3", kAB, rel(N, "A", "B"), rel(N, "A∩B", "A∪B"), premise(N));
}

void add_third_set(Registry& r) {
  const std::vector<std::string> c{"C"};
  r.proved("prop9.1", kABC, rel(P, "A", "B"), rel(P, "A", "B∪C"), premise(P, c));
  r.proved("prop9.2", kABC, rel(A_, "A", "B"), rel(A_, "A", "B∪C"), premise(A_, c));
  r.proved("prop9.3", kABC, rel(S, "A", "B"), sot("A", "B∪C"), premise(S, c));
  r.proved("prop9.4", kABC, rel(T, "A", "B"), sot("A", "B∪C"), premise(T, c));
  r.proved("prop9.5", kABC, rel(N, "A", "B"), sot("A", "B∪C"), premise(N, c));
  r.proved("prop9p.1", kABC, sot("A", "B"), sot("A", "B∪C"), premise(kSot, c));

  const std::pair<K, K> weak[] = {{P, P}, {A_, A_}, {S, A_}, {T, P}, {N, A_}};
  for (std::size_t i = 0; i < 5; ++i) {
    const auto [g, k] = weak[i];
    const std::string n = std::to_string(i + 1);
    r.proved("prop10." + n, kABC, rel(g, "A", "B"), rel(k, "A∩C", "B∩C"), premise(g, c));
    r.proved("prop11." + n, kABC, rel(g, "A", "B"), rel(k, "A∪C", "B∪C"), premise(g, c));
  }
  // keep prop10 and prop11 contiguous in registry order
  std::stable_partition(r.laws.end() - 10, r.laws.end(), [](const Law& l) { return l.id.rfind("prop10.", 0) == 0; });

  const std::pair<const char*, K> sot_join[] = {{"prop11.6", S}, {"prop11.7", T}, {"prop11.8", N}};
  for (const auto& [id, k] : sot_join) r.proved(id, kABC, rel(k, "A", "B"), sot("A∪C", "B∪C"), premise(k, c));
  r.proved("prop11p.1", kABC, sot("A", "B"), sot("A∪C", "B∪C"), premise(kSot, c));

  const auto both = [](K k) {
    return std::vector<Step>{either({{fresh("A", k == T ? 1 : 0), above(k, "A", "B"), above(k, "A", "C")},
                                     independent({"A", "B", "C"})})};
  };
  for (const auto& [id, k] : {std::pair{"prop-meet.1", P}, std::pair{"prop-meet.2", A_}})
    r.proved(id, kABC, always(), iff(rel(k, "A", "B") && rel(k, "A", "C"), rel(k, "A", "B∩C")), both(k));
  Law& t = r.proved("prop-meet.3", kABC, rel(T, "A", "B") && rel(T, "A", "C"), rel(T, "A", "B∩C"),
                    {fresh("A", 1), above(T, "A", "B"), above(T, "A", "C")});
  t.fixtures.push_back(converse_fixture());
  r.proved("prop-meet.4", kABC, always(), iff(rel(N, "A", "B") && rel(N, "A", "C"), rel(N, "A", "B∩C")), both(N));
}

void add_complement_and_transitivity(Registry& r) {
  r.proved("prop12.1", kAB, rel(A_, "A", "B"), rel(A_, "Bᶜ", "Aᶜ"), premise(A_));
  r.proved("prop12.2", kAB, rel(M, "A", "B"), rel(M, "Bᶜ", "Aᶜ"), premise(M));
  r.proved("prop12.3", kAB, rel(S, "A", "B"), sot("Bᶜ", "Aᶜ"), premise(S));
  r.proved("prop12.4", kAB, rel(N, "A", "B"), rel(N, "Bᶜ", "Aᶜ"), premise(N));

  const K kinds[] = {P, A_, M, S, T, N};
  for (std::size_t i = 0; i < 6; ++i) {
    const K k = kinds[i];
    r.proved("prop13." + std::to_string(i + 1), kABC, rel(k, "A", "B") && rel(k, "B", "C"), rel(k, "A", "C"),
             {fresh("A", k == T ? 2 : 0), above(k, "A", "B"), above(k, "B", "C")});
  }
}

void add_equality(Registry& r) {
  const auto copies = std::vector<Step>{fresh("A"), copy("B", "A")};
  r.proved("thm2.1", kAB, same("A", "B"), eq_pam("A", "B"), copies);
  r.proved("thm2.2", kAB, always(), iff(eq(S, "A", "B"), same("A", "B")),
           {either({{fresh("A"), copy("B", "A")}, {fresh("A"), above(S, "A", "B")}, independent(kAB)})});
  r.proved("thm2.3", kAB, eq(S, "A", "B"), eq_pam("A", "B"), copies);
  r.proved("thm2.4", kAB, eq(N, "A", "B"), all_degrees_equal("A", "B"), {constant_pair("A", "B")});
  r.proved("thm2.5", kAB, eq(N, "A", "B"), eq_pam("A", "B"), {constant_pair("A", "B")});

  const auto a = independent({"A"});
  const auto ab = independent(kAB);
  const auto abc = independent(kABC);
  r.proved("thm3.1", {"A"}, always(), eq(P, "A∩A", "A") && eq(P, "A∪A", "A"), a);
  r.proved("thm3.2", {"A"}, always(), eq(A_, "A∩A", "A") && eq(A_, "A∪A", "A"), a);
  r.proved("thm3.3", {"A"}, always(), eq(M, "A∩A", "A") && eq(M, "A∪A", "A"), a);
  Law& abs = r.proved("thm3.4", kAB, always(), eq(P, "(A∪B)∩A", "A") && eq(P, "(A∩B)∪A", "A"), ab);
  abs.fixtures.push_back(absorption_fixture());
  r.proved("thm3.5", kAB, always(), eq(A_, "(A∪B)∩A", "A") && eq(A_, "(A∩B)∪A", "A"), ab);
  for (const auto& [id, k] : {std::pair{"thm3.6", P}, std::pair{"thm3.7", A_}}) {
    Law& d = r.proved(id, kABC, always(),
                      eq(k, "(A∪B)∩C", "(C∩A)∪(C∩B)") && eq(k, "(A∩B)∪C", "(C∪A)∩(C∪B)"), abc);
    d.fixtures.push_back(absorption_fixture());
  }
}

void add_families(Registry& r) {
  const std::vector<std::string> f{"F"};
  const std::vector<std::string> a{"A"};
  const std::vector<Step> random_family{family("F")};
  r.proved("thm4.1", {}, always(), rel(P, "⋂F", "⋃F"), random_family, f);
  r.proved("thm4.2", {}, always(), rel(A_, "⋂F", "⋃F"), random_family, f);
  r.proved("thm4.3", {}, always(), rel(M, "⋂F", "⋃F"), random_family, f);
  r.proved("thm4.4", {}, always(), sot("⋂F", "⋃F"), random_family, f);

  const auto all_above = [](K k) {
    return std::vector<Step>{
        either({{fresh("A"), family("F", Mode{k}, "A", Which::all)}, {fresh("A"), family("F")}})};
  };
  const auto one_above = [](K k) { return std::vector<Step>{fresh("A"), family("F", Mode{k}, "A", Which::one)}; };
  r.proved("thm5.1", a, always(), iff(for_all_members(P, "A", "F"), rel(P, "A", "⋂F")), all_above(P), f);
  r.proved("thm5.2", a, for_some_member(P, "A", "F"), rel(P, "A", "⋃F"), one_above(P), f);
  r.proved("thm5.3", a, always(), iff(for_all_members(A_, "A", "F"), rel(A_, "A", "⋂F")), all_above(A_), f);
  r.proved("thm5.4", a, for_some_member(A_, "A", "F"), rel(A_, "A", "⋃F"), one_above(A_), f);
  r.proved("thm5.5", a, for_all_members(T, "A", "F"), rel(T, "A", "⋂F"),
           {fresh("A", 1), family("F", Mode{T}, "A", Which::all)}, f);
  r.proved("thm5.6", a, for_some_member(T, "A", "F") && shorter_than_all_members("A", "F"), rel(T, "A", "⋃F"),
           {fresh("A", 1), longer_family("F", "A")}, f);
  r.proved("thm5.7", a, always(), iff(for_all_members(N, "A", "F"), rel(N, "A", "⋂F")), all_above(N), f);
  r.proved("thm5.8", a, for_some_member(N, "A", "F"), rel(N, "A", "⋃F"), one_above(N), f);

  const std::vector<std::string> ff{"F1", "F2"};
  const std::vector<Step> sub{subfamily_pair("F1", "F2")};
  const Predicate g = subfamily("F1", "F2");
  r.proved("thm6.1", {}, g, rel(P, "⋂F2", "⋂F1"), sub, ff);
  r.proved("thm6.2", {}, g, rel(P, "⋃F1", "⋃F2"), sub, ff);
  r.proved("thm6.3", {}, g, rel(P, "⋂F1", "⋃F2"), sub, ff);
  r.proved("thm6.4", {}, g, rel(A_, "⋂F2", "⋂F1"), sub, ff);
  r.proved("thm6.5", {}, g, rel(A_, "⋃F1", "⋃F2"), sub, ff);
  r.proved("thm6.6", {}, g, rel(A_, "⋂F1", "⋃F2"), sub, ff);
  r.proved("thm6.7", {}, g, sot("⋃F1", "⋃F2"), sub, ff);
  r.proved("thm6.8", {}, g, sot("⋂F1", "⋃F2"), sub, ff);
}

void add_characterization(Registry& r) {
  r.proved("rem1.3", kAB, always(),
           iff(sot("A", "B"), custom("A(x)(q) ≼ B(x)(q) at every x, q = min(|A(x)|, |B(x)|)", {"A", "B"},
                                      [](const Binding& b) {
                                        const Hfs& x = b.set("A");
                                        const Hfs& y = b.set("B");
                                        require_same_universe(x.universe(), y.universe());
                                        for (std::size_t i = 0; i < x.universe().size(); ++i)
                                          if (!best_q_dominance(x.at(i), y.at(i))) return false;
                                        return true;
                                      })),
           {either({{fresh("A"), above(kSot, "A", "B")}, independent(kAB)})});
}

// ---------------------------------------------------------------------------
// Refuted statements

void add_refuted(Registry& r) {
  const auto ab = independent(kAB);
  r.refuted("exam-sec2.3-m-intersection", kAB, always(), rel(M, "A∩B", "A"), ab, {mean_pair_fixture()});
  r.refuted("exam-sec2.3-m-union", kAB, always(), rel(M, "B", "A∪B"), ab, {mean_pair_fixture()});
  r.refuted("exam-sec2.3-m-either", kAB, always(), rel(M, "A∩B", "A") || rel(M, "A∩B", "B"), ab,
            {mean_pair_fixture()});

  r.refuted("exam-sec2.3-sot-meet-left", kAB, always(), sot("A∩B", "A"), ab, {sot_meet_fixture()});
  r.refuted("exam-sec2.3-sot-meet-right", kAB, always(), sot("A∩B", "B"), ab, {sot_meet_fixture()});

  const std::pair<const char*, std::pair<const char*, const char*>> nec[] = {
      {"meet-left", {"A∩B", "A"}},  {"meet-right", {"A∩B", "B"}},   {"join-left", {"A", "A∪B"}},
      {"join-right", {"B", "A∪B"}}, {"meet-join", {"A∩B", "A∪B"}}};
  for (const auto& [suffix, sides] : nec)
    r.refuted(std::string("exam-sec2.3-n-") + suffix, kAB, always(), rel(N, sides.first, sides.second), ab,
              {interleaved_fixture()});

  struct Eight {
    K guard;
    bool meet;
    K claim;
    std::size_t element;
  };
  const Eight eight[] = {
      {P, true, M, 1},   {P, true, T, 1},   {P, true, A_, 2},  {P, false, M, 1},  {P, false, A_, 1},
      {P, false, T, 1},  {A_, true, M, 5},  {A_, true, T, 5},  {A_, false, M, 8}, {A_, false, T, 5},
      {M, true, P, 3},   {M, true, M, 2},   {M, false, P, 3},  {M, false, M, 4},  {S, true, M, 5},
      {S, true, T, 5},   {S, false, M, 4},  {S, false, T, 5},  {T, true, M, 6},   {T, true, A_, 6},
      {T, true, T, 6},   {T, false, M, 7},  {T, false, A_, 7}, {T, false, T, 6},  {N, true, M, 5},
      {N, true, T, 5},   {N, false, M, 8},  {N, false, T, 5},
  };
  for (const Eight& e : eight) {
    const std::string id = std::string("exam-sec2.4-") + tag(e.guard) + (e.meet ? "-meet-" : "-join-") + tag(e.claim);
    std::string lowered = id;
    std::transform(lowered.begin(), lowered.end(), lowered.begin(), [](unsigned char ch) { return std::tolower(ch); });
    r.refuted(lowered, kABC, rel(e.guard, "A", "B"),
              e.meet ? rel(e.claim, "A∩C", "B∩C") : rel(e.claim, "A∪C", "B∪C"), premise(e.guard, {"C"}),
              {eight_element_fixture(e.element)});
  }

  r.refuted("exam-sec2.4-converse-meet-t", kABC, rel(T, "A", "B∩C"), rel(T, "A", "B") && rel(T, "A", "C"),
            independent(kABC), {converse_fixture()});

  for (K k : {P, M})
    r.refuted(std::string("exam-sec2.5-comp-p-") + static_cast<char>(std::tolower(tag(k))), kAB, rel(P, "A", "B"),
              rel(k, "Bᶜ", "Aᶜ"), premise(P), {complement_fixture(true)});
  for (K k : kAllRelationKinds)
    r.refuted(std::string("exam-sec2.5-comp-t-") + static_cast<char>(std::tolower(tag(k))), kAB, rel(T, "A", "B"),
              rel(k, "Bᶜ", "Aᶜ"), premise(T), {complement_fixture(false)});

  const std::pair<const char*, std::pair<const char*, const char*>> laws26[] = {
      {"absorb1", {"(A∩B)∪A", "A"}},
      {"absorb2", {"(A∪B)∩A", "A"}},
      {"distrib", {"(A∪B)∩C", "(A∩C)∪(B∩C)"}},
      {"codistrib", {"(A∩B)∪C", "(A∪C)∩(B∪C)"}}};
  for (const auto& [name, sides] : laws26) {
    const auto& [l, rr] = sides;
    const std::string base = std::string("exam-sec2.6-") + name;
    const auto abc = independent(kABC);
    r.refuted(base + "-m", kABC, always(), eq(M, l, rr), abc, {absorption_fixture()});
    r.refuted(base + "-eq", kABC, always(), same(l, rr), abc, {absorption_fixture()});
    r.refuted(base + "-n", kABC, always(), eq(N, l, rr), abc, {absorption_fixture()});
  }
}

std::vector<Law> build_registry() {
  Registry r;
  add_algebra(r);
  add_implications(r);
  add_pairs(r);
  add_third_set(r);
  add_complement_and_transitivity(r);
  add_equality(r);
  add_families(r);
  add_characterization(r);
  add_refuted(r);
  return std::move(r.laws);
}

}  // namespace

const std::vector<Law>& law_registry() {
  static const std::vector<Law> registry = build_registry();
  return registry;
}

}  // namespace hfa
