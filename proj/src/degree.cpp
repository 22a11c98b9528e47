#include "hfa/degree.hpp"

#include "hfa/error.hpp"

#include <charconv>
#include <numeric>

namespace hfa {

namespace {

constexpr std::int64_t kDecimalScale = 1'000'000'000;  // 10^kMaxFractionDigits

std::string quoted(std::string_view text) { return "'" + std::string(text) + "'"; }

bool all_digits(std::string_view s) {
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::int64_t parse_integer(std::string_view digits, std::string_view whole_text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw DegreeError("degree out of range: " + quoted(whole_text));
  return value;
}

}  // namespace

Degree Degree::from_fraction(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw DegreeError("degree denominator must be positive");
  if (num < 0 || num > den)
    throw DegreeError("degree " + std::to_string(num) + "/" + std::to_string(den) +
                      " is outside [0, 1]");
  const std::int64_t g = std::gcd(num, den);
  return Degree{num / g, den / g};
}

std::string Degree::to_string() const {
  if (kDecimalScale % den_ != 0) return std::to_string(num_) + "/" + std::to_string(den_);
  if (num_ == den_) return "1";
  if (num_ == 0) return "0";
  std::string frac = std::to_string(num_ * (kDecimalScale / den_));
  frac.insert(0, static_cast<std::size_t>(kMaxFractionDigits) - frac.size(), '0');
  while (frac.back() == '0') frac.pop_back();
  return "0." + frac;
}

Degree parse_degree(std::string_view text) {
  if (text.empty()) throw DegreeError("empty degree");
  if (text.front() == '+' || text.front() == '-') {
    if (text.front() == '-' && text.size() > 1 && all_digits(text.substr(1, 1)))
      throw DegreeError("degree out of range [0, 1]: " + quoted(text));
    throw DegreeError("malformed degree: " + quoted(text));
  }

  const auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);

  if ((whole.empty() && frac.empty()) || !all_digits(whole) || !all_digits(frac))
    throw DegreeError("malformed degree: " + quoted(text));
  if (frac.size() > static_cast<std::size_t>(kMaxFractionDigits))
    throw DegreeError("degree has more than 9 fractional digits: " + quoted(text));

  // Strip leading zeros so that e.g. "000000000000001" is judged by value.
  while (whole.size() > 1 && whole.front() == '0') whole.remove_prefix(1);
  if (whole.size() > 1 || (!whole.empty() && whole.front() > '1'))
    throw DegreeError("degree out of range [0, 1]: " + quoted(text));

  const std::int64_t units = whole.empty() ? 0 : whole.front() - '0';
  std::int64_t fraction = 0;
  if (!frac.empty()) {
    fraction = parse_integer(frac, text);
    for (std::size_t i = frac.size(); i < static_cast<std::size_t>(kMaxFractionDigits); ++i)
      fraction *= 10;
  }
  const std::int64_t scaled = units * kDecimalScale + fraction;
  if (scaled > kDecimalScale) throw DegreeError("degree out of range [0, 1]: " + quoted(text));
  return Degree::from_fraction(scaled, kDecimalScale);
}

Degree parse_degree_exact(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_degree(text);
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den))
    throw DegreeError("malformed fraction degree: " + quoted(text));
  return Degree::from_fraction(parse_integer(num, text), parse_integer(den, text));
}

}  // namespace hfa
