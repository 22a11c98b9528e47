#include "hfa/relations.hpp"

#include "hfa/error.hpp"
#include "hfa/hfs.hpp"

#include <algorithm>
#include <cassert>

namespace hfa {

namespace {

// w[i] >= v[i] for i < count.
bool prefix_dominated(const Hfe& v, const Hfe& w, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i)
    if (w[i] < v[i]) return false;
  return true;
}

}  // namespace

char tag(RelationKind kind) noexcept {
  switch (kind) {
    case RelationKind::possible: return 'p';
    case RelationKind::acceptable: return 'a';
    case RelationKind::mean: return 'm';
    case RelationKind::strong: return 's';
    case RelationKind::truncated: return 't';
    case RelationKind::necessary: return 'n';
  }
  return '?';
}

RelationKind relation_kind_from_tag(std::string_view text) {
  if (text.size() == 1) {
    for (RelationKind kind : kAllRelationKinds)
      if (tag(kind) == text.front() || tag(kind) == text.front() + ('a' - 'A')) return kind;
  }
  throw InvalidArgument("unknown relation kind '" + std::string(text) + "' (expected one of p, a, m, s, t, n)");
}

std::string_view symbol(RelationKind kind) noexcept {
  switch (kind) {
    case RelationKind::possible: return "⊂ₚ";
    case RelationKind::acceptable: return "⊂ₐ";
    case RelationKind::mean: return "⊂ₘ";
    case RelationKind::strong: return "⊂ₛ";
    case RelationKind::truncated: return "⊂ₜ";
    case RelationKind::necessary: return "⊂ₙ";
  }
  return "?";
}

std::string_view to_string(SotVerdict v) noexcept {
  switch (v) {
    case SotVerdict::strong: return "S";
    case SotVerdict::truncated: return "T";
    case SotVerdict::none: return "NONE";
  }
  return "?";
}

bool dominates(std::span<const Degree> v, std::span<const Degree> w) {
  if (v.size() != w.size())
    throw InvalidArgument("dominance needs sequences of equal length (" + std::to_string(v.size()) +
                          " vs " + std::to_string(w.size()) + ")");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (w[i] < v[i]) return false;
  return true;
}

Hfe best_q_subsequence(const Hfe& w, std::size_t q) {
  if (q < 1 || q > w.size())
    throw InvalidArgument("q = " + std::to_string(q) + " outside [1, " + std::to_string(w.size()) + "]");
  const auto top = w.degrees().first(q);
  return Hfe(std::vector<Degree>(top.begin(), top.end()));
}

bool is_subsequence(const Hfe& sub, const Hfe& whole) {
  // Both descending: std::includes with the matching comparator is multiset
  // containment.
  return std::includes(whole.degrees().begin(), whole.degrees().end(), sub.degrees().begin(),
                       sub.degrees().end(), std::greater<>{});
}

bool element_relation(RelationKind kind, const Hfe& a, const Hfe& b) {
  switch (kind) {
    case RelationKind::possible:
      return a.upper() <= b.upper();
    case RelationKind::acceptable:
      return a.upper() <= b.upper() && a.lower() <= b.lower();
    case RelationKind::mean:
      return compare_means(a, b) <= 0;
    case RelationKind::strong:
      return a.size() >= b.size() && prefix_dominated(a, b, b.size());
    case RelationKind::truncated:
      return a.size() < b.size() && prefix_dominated(a, b, a.size());
    case RelationKind::necessary:
      return a.upper() <= b.lower();
  }
  return false;
}

SotVerdict classify_sot(const Hfe& a, const Hfe& b) {
  if (a.size() >= b.size()) return prefix_dominated(a, b, b.size()) ? SotVerdict::strong : SotVerdict::none;
  return prefix_dominated(a, b, a.size()) ? SotVerdict::truncated : SotVerdict::none;
}

RelationProfile relation_profile(const Hfe& a, const Hfe& b) {
  RelationProfile profile;
  for (std::size_t i = 0; i < kAllRelationKinds.size(); ++i)
    profile.verdicts[i] = element_relation(kAllRelationKinds[i], a, b);
  profile.sot = classify_sot(a, b);

#ifndef NDEBUG
  const auto has = [&](RelationKind k) { return profile.holds(k); };
  using K = RelationKind;
  assert(!has(K::necessary) || (has(K::possible) && has(K::acceptable) && has(K::mean) &&
                                (has(K::strong) || has(K::truncated))));
  assert(!has(K::strong) || (has(K::acceptable) && has(K::mean)));
  assert(!has(K::acceptable) || has(K::possible));
  assert(!has(K::truncated) || has(K::possible));
  assert(!(has(K::strong) && has(K::truncated)));
#endif
  return profile;
}

bool set_relation(RelationKind kind, const Hfs& a, const Hfs& b) {
  require_same_universe(a.universe(), b.universe());
  for (std::size_t i = 0; i < a.universe().size(); ++i)
    if (!element_relation(kind, a.at(i), b.at(i))) return false;
  return true;
}

bool set_equality(RelationKind kind, const Hfs& a, const Hfs& b) {
  if (kind == RelationKind::truncated)
    throw InvalidArgument("the truncated relation has no equality: A ⊂ₜ B and B ⊂ₜ A cannot both hold");
  return set_relation(kind, a, b) && set_relation(kind, b, a);
}

}  // namespace hfa
