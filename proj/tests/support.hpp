#pragma once

#include "hfa/binding.hpp"
#include "hfa/degree.hpp"
#include "hfa/hfe.hpp"
#include "hfa/hfs.hpp"

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace test {

inline hfa::Degree D(std::string_view text) { return hfa::parse_degree(text); }

inline hfa::Hfe H(std::initializer_list<std::string_view> decimals) { return hfa::make_hfe(decimals); }

/// Set over a one-element universe {x}.
inline hfa::Hfs single(const hfa::Hfe& h, const std::string& element = "x") {
  return hfa::Hfs(hfa::Universe({element}), {h});
}

inline hfa::Rational R(long num, long den) { return hfa::Rational(num, den); }

inline std::filesystem::path data_dir() { return HFA_TEST_DATA_DIR; }

}  // namespace test
