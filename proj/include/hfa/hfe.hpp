#pragma once

#include "hfa/degree.hpp"
#include "hfa/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hfa {

/// Hesitant fuzzy element: a non-empty finite multiset of degrees, held in
/// canonical descending order. Equality is multiset equality.
class Hfe {
 public:
  /// Canonicalizes `values`. Throws InvalidArgument if empty.
  explicit Hfe(std::vector<Degree> values);
  Hfe(std::initializer_list<Degree> values) : Hfe(std::vector<Degree>(values)) {}

  std::span<const Degree> degrees() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  const Degree& operator[](std::size_t i) const noexcept { return degrees_[i]; }

  Degree upper() const noexcept { return degrees_.front(); }
  Degree lower() const noexcept { return degrees_.back(); }

  /// True when every degree is identical.
  bool is_constant() const noexcept { return upper() == lower(); }

  /// Exact sum of the degrees, counted with multiplicity.
  Rational sum() const;

  /// "{0.9, 0.8, 0.1, 0.1}"
  std::string to_string() const;

  friend bool operator==(const Hfe& a, const Hfe& b) noexcept { return a.degrees_ == b.degrees_; }

  /// Three-way comparison of the two means without leaving exact arithmetic.
  friend std::strong_ordering compare_means(const Hfe& a, const Hfe& b);

 private:
  struct Sorted {};
  Hfe(Sorted, std::vector<Degree> descending);
  void index_sum();

  friend Hfe hfe_union(const Hfe&, const Hfe&);
  friend Hfe hfe_intersection(const Hfe&, const Hfe&);
  friend Hfe hfe_complement(const Hfe&);

  std::vector<Degree> degrees_;
  // sum == sum_num_ / common_den_ when common_den_ != 0 (no overflow seen).
  std::int64_t sum_num_ = 0;
  std::int64_t common_den_ = 0;
};

/// Builds the canonical HFE. Throws InvalidArgument on empty input.
Hfe make_hfe(std::span<const Degree> values);

/// Convenience for fixtures and tests: every string goes through `parse_degree`.
Hfe make_hfe(std::initializer_list<std::string_view> decimals);

/// (lower, upper) = (min, max) degree.
std::pair<Degree, Degree> bounds(const Hfe& h);

/// Exact arithmetic mean, counting multiplicity.
Rational mean(const Hfe& h);

/// Degrees of a ⊔ b that are >= max(a.lower, b.lower).
Hfe hfe_union(const Hfe& a, const Hfe& b);

/// Degrees of a ⊔ b that are <= min(a.upper, b.upper).
Hfe hfe_intersection(const Hfe& a, const Hfe& b);

/// {1 - g : g in a}, multiplicity preserved.
Hfe hfe_complement(const Hfe& a);

}  // namespace hfa
