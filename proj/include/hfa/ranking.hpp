#pragma once

#include "hfa/hfs.hpp"
#include "hfa/relations.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hfa {

/// Pairwise comparison of the elements (schemes) of one set.
struct RankingOutput {
  RelationKind kind = RelationKind::possible;
  std::vector<std::string> schemes;
  /// holds[i][j]: schemes[i](x) ⊂kind schemes[j](x).
  std::vector<std::vector<bool>> holds;
  /// Strict part: j strictly above i iff holds[i][j] and not holds[j][i].
  /// Layer 0 holds the schemes nothing is strictly above.
  std::vector<std::vector<std::string>> layers;
  /// Distinct pairs related both ways, and pairs related neither way.
  std::vector<std::pair<std::string, std::string>> ties;
  std::vector<std::pair<std::string, std::string>> unresolved;

  bool strictly_below(std::size_t i, std::size_t j) const { return holds[i][j] && !holds[j][i]; }
};

/// Throws InvalidArgument for the truncated kind, which has no equality and
/// is not a preorder.
RankingOutput rank_schemes(const Hfs& set, RelationKind kind);

/// Graphviz digraph of the covering pairs of the strict order, best on top;
/// ties are drawn as dashed undirected edges.
void write_dot(const RankingOutput& ranking, std::ostream& out);

std::string ranking_to_json(const RankingOutput& ranking);

}  // namespace hfa
