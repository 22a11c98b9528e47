#include "hfa/document.hpp"

#include "hfa/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace hfa {

using Json = nlohmann::ordered_json;

const Hfs& Document::set(std::string_view name) const {
  for (const auto& [n, s] : sets)
    if (n == name) return s;
  throw InvalidArgument("unknown set '" + std::string(name) + "'");
}

Binding Document::binding() const {
  Binding b;
  for (const auto& [name, s] : sets) b.set(name, s);
  for (const auto& [name, members] : families) {
    std::vector<Family::Member> m;
    for (const auto& member : members) m.emplace_back(member, set(member));
    b.set_family(name, Family(std::move(m)));
  }
  return b;
}

namespace {

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

const Json& require(const Json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw DocumentError(join(path, key), "missing required key");
  return *it;
}

std::string expect_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw DocumentError(path, std::string("expected a string, found ") + j.type_name());
  return j.get<std::string>();
}

Degree parse_degree_at(const Json& j, const std::string& path) {
  if (j.is_number()) throw DocumentError(path, "degrees must be written as strings, e.g. \"0.45\"");
  try {
    return parse_degree_exact(expect_string(j, path));
  } catch (const DegreeError& e) {
    throw DocumentError(path, e.what());
  }
}

Universe parse_universe(const Json& j) {
  if (!j.is_array() || j.empty()) throw DocumentError("universe", "expected a non-empty array of element names");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string path = "universe[" + std::to_string(i) + "]";
    std::string name = expect_string(j[i], path);
    if (name.empty()) throw DocumentError(path, "element names must be non-empty");
    if (!seen.insert(name).second) throw DocumentError(path, "duplicate element '" + name + "'");
    names.push_back(std::move(name));
  }
  return Universe(std::move(names));
}

Hfs parse_set(const Json& j, const Universe& u, const std::string& path) {
  if (!j.is_object()) throw DocumentError(path, "expected an object mapping elements to degree lists");
  for (const auto& [element, value] : j.items())
    if (!u.index_of(element)) throw DocumentError(join(path, element), "element is not in the universe");
  std::vector<Hfe> memberships;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const std::string element_path = join(path, u[i]);
    const auto it = j.find(u[i]);
    if (it == j.end()) throw DocumentError(element_path, "missing membership for element '" + u[i] + "'");
    if (!it->is_array() || it->empty()) throw DocumentError(element_path, "expected a non-empty array of degrees");
    std::vector<Degree> degrees;
    for (std::size_t k = 0; k < it->size(); ++k)
      degrees.push_back(parse_degree_at((*it)[k], element_path + "[" + std::to_string(k) + "]"));
    memberships.emplace_back(std::move(degrees));
  }
  return Hfs(u, std::move(memberships));
}

}  // namespace

Document parse_document(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw DocumentError("", std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw DocumentError("", "top level must be an object");
  for (const auto& [key, value] : root.items())
    if (key != "universe" && key != "sets" && key != "families") throw DocumentError(key, "unknown key");

  Document doc{parse_universe(require(root, "universe", "")), {}, {}};

  const Json& sets = require(root, "sets", "");
  if (!sets.is_object()) throw DocumentError("sets", "expected an object");
  for (const auto& [name, value] : sets.items()) {
    if (name.empty()) throw DocumentError("sets", "set names must be non-empty");
    doc.sets.emplace_back(name, parse_set(value, doc.universe, "sets." + name));
  }

  if (const auto it = root.find("families"); it != root.end()) {
    if (!it->is_object()) throw DocumentError("families", "expected an object");
    for (const auto& [name, value] : it->items()) {
      const std::string path = "families." + name;
      if (!value.is_array() || value.empty()) throw DocumentError(path, "expected a non-empty array of set names");
      std::vector<std::string> members;
      for (std::size_t i = 0; i < value.size(); ++i) {
        const std::string mpath = path + "[" + std::to_string(i) + "]";
        std::string member = expect_string(value[i], mpath);
        const bool known = std::any_of(doc.sets.begin(), doc.sets.end(), [&](const auto& s) { return s.first == member; });
        if (!known) throw DocumentError(mpath, "unknown set '" + member + "'");
        if (std::find(members.begin(), members.end(), member) != members.end())
          throw DocumentError(mpath, "set '" + member + "' listed twice");
        members.push_back(std::move(member));
      }
      doc.families.emplace_back(name, std::move(members));
    }
  }
  return doc;
}

Document load_document(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return load_document(in);
}

namespace {

std::string json_string(std::string_view s) { return Json(std::string(s)).dump(); }

}  // namespace

std::string format_document(const Document& doc) {
  std::string out = "{\n  \"universe\": [";
  for (std::size_t i = 0; i < doc.universe.size(); ++i) out += (i ? ", " : "") + json_string(doc.universe[i]);
  out += "],\n  \"sets\": {";
  for (std::size_t s = 0; s < doc.sets.size(); ++s) {
    const auto& [name, set] = doc.sets[s];
    out += (s ? ",\n    " : "\n    ") + json_string(name) + ": {";
    for (std::size_t i = 0; i < doc.universe.size(); ++i) {
      out += (i ? ",\n      " : "\n      ") + json_string(doc.universe[i]) + ": [";
      const auto& degrees = set.at(i).degrees();
      for (std::size_t k = 0; k < degrees.size(); ++k) out += (k ? ", " : "") + json_string(degrees[k].to_string());
      out += "]";
    }
    out += "\n    }";
  }
  out += doc.sets.empty() ? "}" : "\n  }";
  if (!doc.families.empty()) {
    out += ",\n  \"families\": {";
    for (std::size_t f = 0; f < doc.families.size(); ++f) {
      const auto& [name, members] = doc.families[f];
      out += (f ? ",\n    " : "\n    ") + json_string(name) + ": [";
      for (std::size_t k = 0; k < members.size(); ++k) out += (k ? ", " : "") + json_string(members[k]);
      out += "]";
    }
    out += "\n  }";
  }
  return out + "\n}\n";
}

void save_document(const Document& doc, std::ostream& out) { out << format_document(doc); }

void save_document(const Document& doc, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  save_document(doc, out);
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

Document ingest_scores(std::istream& in, std::string set_name) {
  if (set_name.empty()) throw InvalidArgument("set name must be non-empty");
  std::vector<std::string> schemes;
  std::map<std::string, std::vector<Degree>> scores;
  std::set<std::pair<std::string, std::string>> rated;

  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = "line " + std::to_string(line_no);
    if (trim(line).empty() || trim(line).front() == '#') continue;
    const auto fields = split_row(line);
    if (fields.size() != 3) throw DocumentError(where, "expected 3 fields (scheme,expert,score), found " + std::to_string(fields.size()));
    if (first) {
      first = false;
      if (lower(fields[0]) == "scheme" && lower(fields[2]) == "score") continue;
    }
    const auto& [scheme, expert, score] = std::tie(fields[0], fields[1], fields[2]);
    if (scheme.empty()) throw DocumentError(where, "scheme name is empty");
    if (!rated.emplace(scheme, expert).second)
      throw DocumentError(where, "expert '" + expert + "' rates scheme '" + scheme + "' twice");
    if (!scores.count(scheme)) schemes.push_back(scheme);
    auto& list = scores[scheme];
    if (score.empty()) continue;
    try {
      list.push_back(parse_degree(score));
    } catch (const DegreeError& e) {
      throw DocumentError(where, e.what());
    }
  }
  if (schemes.empty()) throw DocumentError("input", "no score rows");

  std::vector<Hfe> memberships;
  for (const auto& scheme : schemes) {
    if (scores[scheme].empty()) throw DocumentError("scheme " + scheme, "every score is blank");
    memberships.emplace_back(scores[scheme]);
  }
  Universe u(schemes);
  Document doc{u, {}, {}};
  doc.sets.emplace_back(std::move(set_name), Hfs(u, std::move(memberships)));
  return doc;
}

}  // namespace hfa
