#pragma once

#include <json.hpp>

#include <algorithm>

#include <string>

namespace hfa::detail {

/// Indented JSON with arrays of scalars kept on one line.
inline void write_json(const nlohmann::ordered_json& j, std::string& out, int indent) {
  const auto newline = [&](int level) {
    out += '\n';
    out.append(static_cast<std::size_t>(level) * 2, ' ');
  };
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += '{';
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out += ',';
      first = false;
      newline(indent + 1);
      out += nlohmann::ordered_json(key).dump() + ": ";
      write_json(value, out, indent + 1);
    }
    newline(indent);
    out += '}';
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const auto& e) { return e.is_primitive(); });
    if (flat) {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      out += ']';
      return;
    }
    out += '[';
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ',';
      newline(indent + 1);
      write_json(j[i], out, indent + 1);
    }
    newline(indent);
    out += ']';
  } else {
    out += j.dump();
  }
}

inline std::string format_json(const nlohmann::ordered_json& j) {
  std::string out;
  write_json(j, out, 0);
  return out + '\n';
}

}  // namespace hfa::detail
