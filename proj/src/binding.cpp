#include "hfa/binding.hpp"

#include "hfa/error.hpp"

#include <algorithm>

namespace hfa {

namespace {

template <typename Vec>
auto find_named(Vec& v, std::string_view name) {
  return std::find_if(v.begin(), v.end(), [&](const auto& entry) { return entry.first == name; });
}

bool same_family(const Family& a, const Family& b) {
  return std::equal(a.members().begin(), a.members().end(), b.members().begin(), b.members().end());
}

}  // namespace

void Binding::set(std::string name, Hfs value) {
  if (auto it = find_named(sets_, name); it != sets_.end()) {
    it->second = std::move(value);
    return;
  }
  sets_.emplace_back(std::move(name), std::move(value));
}

void Binding::set_family(std::string name, Family value) {
  if (auto it = find_named(families_, name); it != families_.end()) {
    it->second = std::move(value);
    return;
  }
  families_.emplace_back(std::move(name), std::move(value));
}

const Hfs* Binding::find_set(std::string_view name) const noexcept {
  auto it = find_named(sets_, name);
  return it == sets_.end() ? nullptr : &it->second;
}

const Family* Binding::find_family(std::string_view name) const noexcept {
  auto it = find_named(families_, name);
  return it == families_.end() ? nullptr : &it->second;
}

const Hfs& Binding::set(std::string_view name) const {
  if (const Hfs* s = find_set(name)) return *s;
  throw InvalidArgument("no set named '" + std::string(name) + "'");
}

const Family& Binding::family(std::string_view name) const {
  if (const Family* f = find_family(name)) return *f;
  throw InvalidArgument("no family named '" + std::string(name) + "'");
}

const Universe& Binding::universe() const {
  const Universe* u = nullptr;
  for (const auto& [name, s] : sets_) {
    if (u == nullptr) u = &s.universe();
    require_same_universe(*u, s.universe());
  }
  for (const auto& [name, f] : families_) {
    if (u == nullptr) u = &f.universe();
    require_same_universe(*u, f.universe());
  }
  if (u == nullptr) throw InvalidArgument("empty binding has no universe");
  return *u;
}

bool operator==(const Binding& a, const Binding& b) {
  return a.sets_ == b.sets_ &&
         std::equal(a.families_.begin(), a.families_.end(), b.families_.begin(), b.families_.end(),
                    [](const auto& x, const auto& y) { return x.first == y.first && same_family(x.second, y.second); });
}

}  // namespace hfa
