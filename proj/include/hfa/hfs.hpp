#pragma once

#include "hfa/hfe.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hfa {

/// Ordered, non-empty list of distinct element identifiers. Copies share
/// storage.
class Universe {
 public:
  /// Throws InvalidArgument when empty or when an identifier repeats.
  explicit Universe(std::vector<std::string> elements);

  std::span<const std::string> elements() const noexcept { return *elements_; }
  std::size_t size() const noexcept { return elements_->size(); }
  const std::string& operator[](std::size_t i) const noexcept { return (*elements_)[i]; }

  std::optional<std::size_t> index_of(std::string_view element) const;

  friend bool operator==(const Universe& a, const Universe& b) noexcept {
    return a.elements_ == b.elements_ || *a.elements_ == *b.elements_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> elements_;
};

/// Hesitant fuzzy set: one HFE per universe element.
class Hfs {
 public:
  /// `memberships[i]` belongs to `universe[i]`. Throws InvalidArgument on a
  /// size mismatch.
  Hfs(Universe universe, std::vector<Hfe> memberships);

  const Universe& universe() const noexcept { return universe_; }
  std::span<const Hfe> memberships() const noexcept { return memberships_; }
  const Hfe& at(std::size_t i) const noexcept { return memberships_[i]; }
  /// Throws InvalidArgument for an unknown element.
  const Hfe& at(std::string_view element) const;

  friend bool operator==(const Hfs& a, const Hfs& b) noexcept {
    return a.universe_ == b.universe_ && a.memberships_ == b.memberships_;
  }

 private:
  Universe universe_;
  std::vector<Hfe> memberships_;
};

/// Throws UniverseMismatch unless both sets share a universe.
void require_same_universe(const Universe& a, const Universe& b);

/// Builds an HFS from element -> degrees assignments covering exactly the
/// universe. Throws InvalidArgument naming the missing or unknown element, or
/// an element with an empty membership.
Hfs make_hfs(const Universe& universe, const std::map<std::string, std::vector<Degree>, std::less<>>& assignments);

enum class SetOp { union_, intersection };

/// Pointwise hfe_union / hfe_intersection.
Hfs combine(SetOp op, const Hfs& a, const Hfs& b);

/// Pointwise hfe_complement.
Hfs complement(const Hfs& a);

/// Named hesitant fuzzy sets over one universe.
class Family {
 public:
  using Member = std::pair<std::string, Hfs>;

  /// Throws InvalidArgument when empty or names repeat, UniverseMismatch when
  /// a member has another universe.
  explicit Family(std::vector<Member> members);

  const Universe& universe() const noexcept { return members_.front().second.universe(); }
  std::span<const Member> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

 private:
  std::vector<Member> members_;
};

/// Left fold of `combine` over the members in order.
Hfs family_fold(SetOp op, const Family& family);

/// Every member of `sub` equals (as a multiset-valued HFS) some member of
/// `super`. Throws UniverseMismatch.
bool is_subfamily(const Family& sub, const Family& super);

}  // namespace hfa
