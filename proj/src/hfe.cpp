#include "hfa/hfe.hpp"

#include "hfa/error.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>

namespace hfa {

namespace {

// Bounds under which the 128-bit fast path of compare_means cannot overflow.
constexpr std::int64_t kFastDen = std::int64_t{1} << 40;
constexpr std::size_t kFastCount = std::size_t{1} << 20;

}  // namespace

Hfe::Hfe(std::vector<Degree> values) : degrees_(std::move(values)) {
  if (degrees_.empty()) throw InvalidArgument("a hesitant fuzzy element needs at least one degree");
  std::sort(degrees_.begin(), degrees_.end(), std::greater<>{});
  index_sum();
}

Hfe::Hfe(Sorted, std::vector<Degree> descending) : degrees_(std::move(descending)) {
  assert(!degrees_.empty());
  assert(std::is_sorted(degrees_.begin(), degrees_.end(), std::greater<>{}));
  index_sum();
}

void Hfe::index_sum() {
  std::int64_t den = 1;
  std::int64_t num = 0;
  for (const Degree& d : degrees_) {
    const std::int64_t g = std::gcd(den, d.denominator());
    const std::int64_t grow = d.denominator() / g;
    std::int64_t new_den = 0;
    std::int64_t new_num = 0;
    std::int64_t term = 0;
    if (__builtin_mul_overflow(den, grow, &new_den) || __builtin_mul_overflow(num, grow, &new_num) ||
        __builtin_mul_overflow(d.numerator(), new_den / d.denominator(), &term) ||
        __builtin_add_overflow(new_num, term, &num)) {
      common_den_ = 0;
      return;
    }
    den = new_den;
  }
  sum_num_ = num;
  common_den_ = den;
}

Rational Hfe::sum() const {
  if (common_den_ != 0) return Rational(sum_num_, common_den_);
  Rational total = 0;
  for (const Degree& d : degrees_) total += d.to_rational();
  return total;
}

std::string Hfe::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i != 0) out += ", ";
    out += degrees_[i].to_string();
  }
  return out + "}";
}

std::strong_ordering compare_means(const Hfe& a, const Hfe& b) {
  const bool fast = a.common_den_ != 0 && b.common_den_ != 0 && a.common_den_ < kFastDen &&
                    b.common_den_ < kFastDen && a.size() < kFastCount && b.size() < kFastCount;
  if (fast) {
    // sum_a / (n_a * den_a)  vs  sum_b / (n_b * den_b)
    const auto lhs = static_cast<__int128>(a.sum_num_) * static_cast<__int128>(b.size()) * b.common_den_;
    const auto rhs = static_cast<__int128>(b.sum_num_) * static_cast<__int128>(a.size()) * a.common_den_;
    return lhs <=> rhs;
  }
  const Rational ma = mean(a);
  const Rational mb = mean(b);
  if (ma < mb) return std::strong_ordering::less;
  if (mb < ma) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Hfe make_hfe(std::span<const Degree> values) { return Hfe(std::vector<Degree>(values.begin(), values.end())); }

Hfe make_hfe(std::initializer_list<std::string_view> decimals) {
  std::vector<Degree> values;
  values.reserve(decimals.size());
  for (std::string_view text : decimals) values.push_back(parse_degree(text));
  return Hfe(std::move(values));
}

std::pair<Degree, Degree> bounds(const Hfe& h) { return {h.lower(), h.upper()}; }

Rational mean(const Hfe& h) { return h.sum() / static_cast<long long>(h.size()); }

Hfe hfe_union(const Hfe& a, const Hfe& b) {
  const Degree threshold = std::max(a.lower(), b.lower());
  std::vector<Degree> merged;
  merged.reserve(a.size() + b.size());
  std::merge(a.degrees_.begin(), a.degrees_.end(), b.degrees_.begin(), b.degrees_.end(),
             std::back_inserter(merged), std::greater<>{});
  // Survivors form a prefix of the descending merge.
  auto cut = std::find_if(merged.begin(), merged.end(), [&](Degree d) { return d < threshold; });
  merged.erase(cut, merged.end());
  return Hfe(Hfe::Sorted{}, std::move(merged));
}

Hfe hfe_intersection(const Hfe& a, const Hfe& b) {
  const Degree threshold = std::min(a.upper(), b.upper());
  std::vector<Degree> merged;
  merged.reserve(a.size() + b.size());
  std::merge(a.degrees_.begin(), a.degrees_.end(), b.degrees_.begin(), b.degrees_.end(),
             std::back_inserter(merged), std::greater<>{});
  // Survivors form a suffix of the descending merge.
  auto first = std::find_if(merged.begin(), merged.end(), [&](Degree d) { return d <= threshold; });
  merged.erase(merged.begin(), first);
  return Hfe(Hfe::Sorted{}, std::move(merged));
}

Hfe hfe_complement(const Hfe& a) {
  std::vector<Degree> out;
  out.reserve(a.size());
  for (auto it = a.degrees_.rbegin(); it != a.degrees_.rend(); ++it) out.push_back(it->complement());
  return Hfe(Hfe::Sorted{}, std::move(out));
}

}  // namespace hfa
