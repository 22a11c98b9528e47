#pragma once

#include "hfa/binding.hpp"
#include "hfa/hfs.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hfa {

/// A universe, named sets over it and families of those sets.
///
///   {
///     "universe": ["x", "y"],
///     "sets": {"A": {"x": ["0.6", "0.5", "0.3"], "y": ["0.5"]}},
///     "families": {"F": ["A"]}
///   }
///
/// Degrees are strings ("0.45" or "1/3") so that values stay exact; JSON
/// numbers are rejected. "families" is optional.
struct Document {
  Universe universe;
  std::vector<std::pair<std::string, Hfs>> sets;
  std::vector<std::pair<std::string, std::vector<std::string>>> families;

  /// Throws InvalidArgument for an unknown name.
  const Hfs& set(std::string_view name) const;
  /// Every set, then every family assembled from the named sets.
  Binding binding() const;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Throws DocumentError naming the offending path (e.g. "sets.A.y").
Document parse_document(std::string_view text);
Document load_document(std::istream& in);
Document load_document(const std::filesystem::path& path);

/// Canonical form: memberships descending, minimal decimals, empty
/// "families" omitted. save(load(save(d))) == save(d).
std::string format_document(const Document& doc);
void save_document(const Document& doc, std::ostream& out);
void save_document(const Document& doc, const std::filesystem::path& path);

/// Rows "scheme,expert,score". A header row is skipped, blank scores are
/// ignored, and schemes keep their first-appearance order. Each scheme's
/// scores become one membership of the set `set_name`. Throws DocumentError
/// with the line number for malformed rows, repeated (scheme, expert) pairs
/// and schemes with no score.
Document ingest_scores(std::istream& in, std::string set_name = "H");

}  // namespace hfa
