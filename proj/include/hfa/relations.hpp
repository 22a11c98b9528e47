#pragma once

#include "hfa/hfe.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace hfa {

class Hfs;

/// The six inclusion strengths. All are non-strict.
enum class RelationKind {
  possible,    ///< p: upper bound dominated
  acceptable,  ///< a: upper and lower bounds dominated
  mean,        ///< m: mean dominated
  strong,      ///< s: positionwise dominance, subset has at least as many degrees
  truncated,   ///< t: positionwise dominance, subset strictly shorter
  necessary,   ///< n: subset's maximum <= superset's minimum
};

inline constexpr std::array<RelationKind, 6> kAllRelationKinds = {
    RelationKind::possible, RelationKind::acceptable, RelationKind::mean,
    RelationKind::strong,   RelationKind::truncated,  RelationKind::necessary};

/// Single-letter tag: 'p', 'a', 'm', 's', 't', 'n'.
char tag(RelationKind kind) noexcept;

/// Inverse of `tag`; accepts either case. Throws InvalidArgument.
RelationKind relation_kind_from_tag(std::string_view tag);

/// "⊂ₚ", "⊂ₐ", ...
std::string_view symbol(RelationKind kind) noexcept;

/// Outcome of the combined strong-or-truncated test.
enum class SotVerdict { strong, truncated, none };

std::string_view to_string(SotVerdict v) noexcept;

struct RelationProfile {
  std::array<bool, 6> verdicts{};  // indexed like kAllRelationKinds
  SotVerdict sot = SotVerdict::none;

  bool holds(RelationKind kind) const noexcept { return verdicts[static_cast<std::size_t>(kind)]; }
};

/// W ≼ W': w[i] >= v[i] at every position of two equal-length descending
/// sequences. Throws InvalidArgument on length mismatch.
bool dominates(std::span<const Degree> v, std::span<const Degree> w);

/// The q largest degrees of `w`, 1 <= q <= |w|. Throws InvalidArgument otherwise.
Hfe best_q_subsequence(const Hfe& w, std::size_t q);

/// Multiset containment of `sub` in `whole`.
bool is_subsequence(const Hfe& sub, const Hfe& whole);

bool element_relation(RelationKind kind, const Hfe& a, const Hfe& b);

/// Strong if a ⊂ₛ b, truncated if a ⊂ₜ b, none otherwise.
SotVerdict classify_sot(const Hfe& a, const Hfe& b);

RelationProfile relation_profile(const Hfe& a, const Hfe& b);

/// kind holds at every universe element. Throws UniverseMismatch.
bool set_relation(RelationKind kind, const Hfs& a, const Hfs& b);

/// Mutual inclusion. Throws InvalidArgument for the truncated kind, which has
/// no equality, and UniverseMismatch.
bool set_equality(RelationKind kind, const Hfs& a, const Hfs& b);

}  // namespace hfa
