#pragma once

#include "hfa/hfs.hpp"

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hfa {

/// Named sets and families that expressions and laws are evaluated against.
/// Insertion order is kept so that serialized bindings are stable.
class Binding {
 public:
  using NamedSet = std::pair<std::string, Hfs>;
  using NamedFamily = std::pair<std::string, Family>;

  /// Inserts or replaces.
  void set(std::string name, Hfs value);
  void set_family(std::string name, Family value);

  const Hfs* find_set(std::string_view name) const noexcept;
  const Family* find_family(std::string_view name) const noexcept;

  /// Throw InvalidArgument when the name is unbound.
  const Hfs& set(std::string_view name) const;
  const Family& family(std::string_view name) const;

  std::span<const NamedSet> sets() const noexcept { return sets_; }
  std::span<const NamedFamily> families() const noexcept { return families_; }
  bool empty() const noexcept { return sets_.empty() && families_.empty(); }

  /// Universe of the first bound set or family. Throws InvalidArgument when
  /// nothing is bound, UniverseMismatch when bound values disagree.
  const Universe& universe() const;

  friend bool operator==(const Binding& a, const Binding& b);

 private:
  std::vector<NamedSet> sets_;
  std::vector<NamedFamily> families_;
};

}  // namespace hfa
