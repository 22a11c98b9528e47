#pragma once

#include "hfa/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hfa {

/// One membership evaluation: an exact rational in [0, 1].
///
/// Stored as a reduced fraction num/den with 0 <= num <= den. The set of
/// degrees is closed under complement (1 - x keeps the denominator), and union
/// and intersection only select existing degrees, so 64-bit storage never
/// overflows; sums go through `Rational`.
class Degree {
 public:
  constexpr Degree() = default;

  /// Throws DegreeError unless 0 <= num <= den and den > 0.
  static Degree from_fraction(std::int64_t num, std::int64_t den);

  static constexpr Degree zero() { return Degree{}; }
  static constexpr Degree one() { return Degree{1, 1}; }

  constexpr std::int64_t numerator() const noexcept { return num_; }
  constexpr std::int64_t denominator() const noexcept { return den_; }

  constexpr Degree complement() const noexcept { return Degree{den_ - num_, den_}; }

  Rational to_rational() const { return Rational(num_, den_); }

  /// Minimal decimal form ("0.45", "1", "0") when the value has at most nine
  /// fractional digits, otherwise "p/q".
  std::string to_string() const;

  friend constexpr bool operator==(Degree a, Degree b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    const auto lhs = static_cast<__int128>(a.num_) * b.den_;
    const auto rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  constexpr Degree(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Maximum number of fractional digits accepted by `parse_degree`.
inline constexpr int kMaxFractionDigits = 9;

/// Parses a finite decimal such as "0.45", "1", ".5" or "1.000" exactly.
/// Throws DegreeError on malformed text, values outside [0, 1], or more than
/// nine fractional digits.
Degree parse_degree(std::string_view text);

/// Like `parse_degree` but also accepts a fraction "p/q". Used when reading
/// back reports whose witnesses may sit on a non-decimal grid.
Degree parse_degree_exact(std::string_view text);

}  // namespace hfa
