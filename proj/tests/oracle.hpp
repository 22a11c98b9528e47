#pragma once
// Brute-force reference model on integer grids: a membership is a list of
// numerators over a shared denominator. Written directly from the relation
// definitions, sharing no code with the library.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using Values = std::vector<int>;

inline Values desc(Values v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

inline int top(const Values& v) { return *std::max_element(v.begin(), v.end()); }
inline int bottom(const Values& v) { return *std::min_element(v.begin(), v.end()); }

inline bool possible(const Values& a, const Values& b) { return top(a) <= top(b); }
inline bool acceptable(const Values& a, const Values& b) { return top(a) <= top(b) && bottom(a) <= bottom(b); }
inline bool mean(const Values& a, const Values& b) {
  const long sa = std::accumulate(a.begin(), a.end(), 0L), sb = std::accumulate(b.begin(), b.end(), 0L);
  return sa * static_cast<long>(b.size()) <= sb * static_cast<long>(a.size());
}
inline bool strong(const Values& a, const Values& b) {
  if (a.size() < b.size()) return false;
  const Values x = desc(a), y = desc(b);
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i] < x[i]) return false;
  return true;
}
inline bool truncated(const Values& a, const Values& b) {
  if (a.size() >= b.size()) return false;
  const Values x = desc(a), y = desc(b);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (y[i] < x[i]) return false;
  return true;
}
inline bool necessary(const Values& a, const Values& b) { return top(a) <= bottom(b); }

/// |a| < |b| and some |a|-element subsequence of b dominates a, checked by
/// trying every index subset of b.
inline bool truncated_by_subsequence(const Values& a, const Values& b) {
  if (a.size() >= b.size()) return false;
  const Values x = desc(a), y = desc(b);
  const std::size_t n = y.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != x.size()) continue;
    Values w;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) w.push_back(y[i]);
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i) ok = w[i] >= x[i];
    if (ok) return true;
  }
  return false;
}

/// q largest values of each side, compared position by position.
inline bool best_q_dominance(const Values& a, const Values& b) {
  const std::size_t q = std::min(a.size(), b.size());
  const Values x = desc(a), y = desc(b);
  for (std::size_t i = 0; i < q; ++i)
    if (y[i] < x[i]) return false;
  return true;
}

inline bool same_multiset(const Values& a, const Values& b) { return desc(a) == desc(b); }

/// Every sequence (ordered, repetitions allowed) of length 1..max_len over
/// {0, ..., grid}.
inline std::vector<Values> all_sequences(int grid, std::size_t max_len) {
  std::vector<Values> out;
  std::function<void(Values&)> rec = [&](Values& cur) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == max_len) return;
    for (int v = 0; v <= grid; ++v) {
      cur.push_back(v);
      rec(cur);
      cur.pop_back();
    }
  };
  Values cur;
  rec(cur);
  return out;
}

/// Every multiset of size 1..max_len over {0, ..., grid}, descending.
inline std::vector<Values> all_multisets(int grid, std::size_t max_len) {
  std::vector<Values> out;
  for (const Values& v : all_sequences(grid, max_len))
    if (std::is_sorted(v.begin(), v.end(), std::greater<>())) out.push_back(v);
  return out;
}

// Pointwise operations, written from the definitions.
inline Values hfe_union(const Values& a, const Values& b) {
  const int floor = std::max(bottom(a), bottom(b));
  Values out;
  for (int v : a) if (v >= floor) out.push_back(v);
  for (int v : b) if (v >= floor) out.push_back(v);
  return desc(out);
}
inline Values hfe_intersection(const Values& a, const Values& b) {
  const int ceiling = std::min(top(a), top(b));
  Values out;
  for (int v : a) if (v <= ceiling) out.push_back(v);
  for (int v : b) if (v <= ceiling) out.push_back(v);
  return desc(out);
}
inline Values hfe_complement(const Values& a, int grid) {
  Values out;
  for (int v : a) out.push_back(grid - v);
  return desc(out);
}

}  // namespace oracle
