#include "hfa/hfs.hpp"

#include "hfa/error.hpp"

#include <algorithm>
#include <set>

namespace hfa {

Universe::Universe(std::vector<std::string> elements) {
  if (elements.empty()) throw InvalidArgument("a universe needs at least one element");
  std::set<std::string_view> seen;
  for (const std::string& e : elements)
    if (!seen.insert(e).second) throw InvalidArgument("duplicate universe element '" + e + "'");
  elements_ = std::make_shared<const std::vector<std::string>>(std::move(elements));
}

std::optional<std::size_t> Universe::index_of(std::string_view element) const {
  const auto it = std::find(elements_->begin(), elements_->end(), element);
  if (it == elements_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_->begin());
}

Hfs::Hfs(Universe universe, std::vector<Hfe> memberships)
    : universe_(std::move(universe)), memberships_(std::move(memberships)) {
  if (memberships_.size() != universe_.size())
    throw InvalidArgument("expected " + std::to_string(universe_.size()) + " memberships, got " +
                          std::to_string(memberships_.size()));
}

const Hfe& Hfs::at(std::string_view element) const {
  const auto i = universe_.index_of(element);
  if (!i) throw InvalidArgument("unknown universe element '" + std::string(element) + "'");
  return memberships_[*i];
}

void require_same_universe(const Universe& a, const Universe& b) {
  if (!(a == b)) throw UniverseMismatch("hesitant fuzzy sets are defined over different universes");
}

Hfs make_hfs(const Universe& universe,
             const std::map<std::string, std::vector<Degree>, std::less<>>& assignments) {
  for (const auto& [element, degrees] : assignments)
    if (!universe.index_of(element)) throw InvalidArgument("unknown universe element '" + element + "'");

  std::vector<Hfe> memberships;
  memberships.reserve(universe.size());
  for (const std::string& element : universe.elements()) {
    const auto it = assignments.find(element);
    if (it == assignments.end()) throw InvalidArgument("no membership for element '" + element + "'");
    if (it->second.empty()) throw InvalidArgument("empty membership for element '" + element + "'");
    memberships.emplace_back(it->second);
  }
  return Hfs(universe, std::move(memberships));
}

Hfs combine(SetOp op, const Hfs& a, const Hfs& b) {
  require_same_universe(a.universe(), b.universe());
  std::vector<Hfe> out;
  out.reserve(a.universe().size());
  for (std::size_t i = 0; i < a.universe().size(); ++i)
    out.push_back(op == SetOp::union_ ? hfe_union(a.at(i), b.at(i)) : hfe_intersection(a.at(i), b.at(i)));
  return Hfs(a.universe(), std::move(out));
}

Hfs complement(const Hfs& a) {
  std::vector<Hfe> out;
  out.reserve(a.universe().size());
  for (const Hfe& h : a.memberships()) out.push_back(hfe_complement(h));
  return Hfs(a.universe(), std::move(out));
}

Family::Family(std::vector<Member> members) : members_(std::move(members)) {
  if (members_.empty()) throw InvalidArgument("a family needs at least one member");
  std::set<std::string_view> names;
  for (const auto& [name, set] : members_) {
    if (!names.insert(name).second) throw InvalidArgument("duplicate family member '" + name + "'");
    require_same_universe(members_.front().second.universe(), set.universe());
  }
}

Hfs family_fold(SetOp op, const Family& family) {
  const auto members = family.members();
  Hfs acc = members.front().second;
  for (std::size_t i = 1; i < members.size(); ++i) acc = combine(op, acc, members[i].second);
  return acc;
}

bool is_subfamily(const Family& sub, const Family& super) {
  require_same_universe(sub.universe(), super.universe());
  return std::all_of(sub.members().begin(), sub.members().end(), [&](const Family::Member& m) {
    return std::any_of(super.members().begin(), super.members().end(),
                       [&](const Family::Member& s) { return s.second == m.second; });
  });
}

}  // namespace hfa
