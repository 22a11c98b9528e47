#include "hfa/ranking.hpp"

#include "hfa/error.hpp"

#include "json_format.hpp"

#include <ostream>

namespace hfa {

RankingOutput rank_schemes(const Hfs& set, RelationKind kind) {
  if (kind == RelationKind::truncated)
    throw InvalidArgument("the truncated relation cannot be used for ranking: it has no equality and is not reflexive");
  RankingOutput r;
  r.kind = kind;
  const std::size_t n = set.universe().size();
  for (std::size_t i = 0; i < n; ++i) r.schemes.push_back(set.universe()[i]);
  r.holds.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.holds[i][j] = element_relation(kind, set.at(i), set.at(j));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (r.holds[i][j] && r.holds[j][i]) r.ties.emplace_back(r.schemes[i], r.schemes[j]);
      if (!r.holds[i][j] && !r.holds[j][i]) r.unresolved.emplace_back(r.schemes[i], r.schemes[j]);
    }

  // Peel maximal elements of the strict part.
  std::vector<std::size_t> above(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r.strictly_below(i, j)) ++above[i];
  std::vector<bool> placed(n, false);
  std::size_t remaining = n;
  while (remaining > 0) {
    std::vector<std::size_t> layer;
    for (std::size_t i = 0; i < n; ++i)
      if (!placed[i] && above[i] == 0) layer.push_back(i);
    if (layer.empty()) throw Error("strict order contains a cycle");
    std::vector<std::string> names;
    for (std::size_t j : layer) {
      placed[j] = true;
      --remaining;
      names.push_back(r.schemes[j]);
      for (std::size_t i = 0; i < n; ++i)
        if (r.strictly_below(i, j)) --above[i];
    }
    r.layers.push_back(std::move(names));
  }
  return r;
}

namespace {

std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_dot(const RankingOutput& r, std::ostream& out) {
  const std::size_t n = r.schemes.size();
  out << "digraph ranking {\n  label=" << dot_id(std::string("strict part of ") + std::string(symbol(r.kind)))
      << ";\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& s : r.schemes) out << "  " << dot_id(s) << ";\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!r.strictly_below(i, j)) continue;
      bool covered = false;
      for (std::size_t k = 0; k < n && !covered; ++k) covered = r.strictly_below(i, k) && r.strictly_below(k, j);
      if (!covered) out << "  " << dot_id(r.schemes[i]) << " -> " << dot_id(r.schemes[j]) << ";\n";
    }
  for (const auto& [a, b] : r.ties) out << "  " << dot_id(a) << " -> " << dot_id(b) << " [dir=none, style=dashed];\n";
  out << "}\n";
}

std::string ranking_to_json(const RankingOutput& r) {
  using Json = nlohmann::ordered_json;
  Json j;
  j["kind"] = std::string(1, tag(r.kind));
  j["schemes"] = r.schemes;
  Json matrix = Json::array();
  for (const auto& row : r.holds) {
    Json jr = Json::array();
    for (bool b : row) jr.push_back(b);
    matrix.push_back(std::move(jr));
  }
  j["holds"] = std::move(matrix);
  j["layers"] = r.layers;
  const auto pairs = [](const auto& v) {
    Json a = Json::array();
    for (const auto& [x, y] : v) a.push_back(Json::array({x, y}));
    return a;
  };
  j["ties"] = pairs(r.ties);
  j["unresolved"] = pairs(r.unresolved);
  return detail::format_json(j);
}

}  // namespace hfa
