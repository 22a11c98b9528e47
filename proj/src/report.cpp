#include "hfa/report.hpp"

#include "hfa/error.hpp"

#include "json_format.hpp"

namespace hfa {

using Json = nlohmann::ordered_json;

namespace {

Json memberships_json(const Hfs& set) {
  Json j = Json::object();
  for (std::size_t i = 0; i < set.universe().size(); ++i) {
    Json degrees = Json::array();
    for (const Degree& d : set.at(i).degrees()) degrees.push_back(d.to_string());
    j[set.universe()[i]] = std::move(degrees);
  }
  return j;
}

Json binding_json(const Binding& b) {
  Json j = Json::object();
  if (b.empty()) return j;
  const Universe& u = b.universe();
  Json universe = Json::array();
  for (std::size_t i = 0; i < u.size(); ++i) universe.push_back(u[i]);
  j["universe"] = std::move(universe);
  Json sets = Json::object();
  for (const auto& [name, set] : b.sets()) sets[name] = memberships_json(set);
  j["sets"] = std::move(sets);
  if (!b.families().empty()) {
    Json families = Json::object();
    for (const auto& [name, family] : b.families()) {
      Json members = Json::object();
      for (const auto& [member, set] : family.members()) members[member] = memberships_json(set);
      families[name] = std::move(members);
    }
    j["families"] = std::move(families);
  }
  return j;
}

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw DocumentError(path, what); }

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path.empty() ? key : path + "." + key, "missing required key");
  return *it;
}

Hfs parse_memberships(const Json& j, const Universe& u, const std::string& path) {
  if (!j.is_object() || j.size() != u.size()) fail(path, "expected one degree list per universe element");
  std::vector<Hfe> memberships;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Json& list = field(j, u[i].c_str(), path);
    const std::string lpath = path + "." + u[i];
    if (!list.is_array() || list.empty()) fail(lpath, "expected a non-empty array of degrees");
    std::vector<Degree> degrees;
    for (const Json& d : list) {
      if (!d.is_string()) fail(lpath, "degrees must be strings");
      try {
        degrees.push_back(parse_degree_exact(d.get<std::string>()));
      } catch (const DegreeError& e) {
        fail(lpath, e.what());
      }
    }
    memberships.emplace_back(std::move(degrees));
  }
  return Hfs(u, std::move(memberships));
}

Binding parse_binding(const Json& j, const std::string& path) {
  Binding b;
  if (j.is_object() && j.empty()) return b;
  const Json& universe = field(j, "universe", path);
  if (!universe.is_array()) fail(path + ".universe", "expected an array");
  std::vector<std::string> names;
  for (const Json& n : universe) {
    if (!n.is_string()) fail(path + ".universe", "element names must be strings");
    names.push_back(n.get<std::string>());
  }
  const Universe u(std::move(names));
  for (const auto& [name, set] : field(j, "sets", path).items())
    b.set(name, parse_memberships(set, u, path + ".sets." + name));
  if (const auto it = j.find("families"); it != j.end()) {
    for (const auto& [name, members] : it->items()) {
      std::vector<Family::Member> m;
      for (const auto& [member, set] : members.items())
        m.emplace_back(member, parse_memberships(set, u, path + ".families." + name + "." + member));
      b.set_family(name, Family(std::move(m)));
    }
  }
  return b;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw DocumentError("", std::string("malformed JSON: ") + e.what());
  }
}

Json range_json(SizeRange r) { return Json::array({r.min, r.max}); }

SizeRange parse_range(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected [min, max]");
  return {j[0].get<std::size_t>(), j[1].get<std::size_t>()};
}

Json verdict_json(const Verdict& v) { return Json{{"guard", v.guard}, {"claim", v.claim}}; }

Verdict parse_verdict(const Json& j, const std::string& path) {
  return Verdict{field(j, "guard", path).get<bool>(), field(j, "claim", path).get<bool>()};
}

}  // namespace

std::string binding_to_json(const Binding& binding) { return detail::format_json(binding_json(binding)); }

Binding binding_from_json(std::string_view text) { return parse_binding(parse_json(text), ""); }

std::string report_to_json(const LawReport& report, bool include_timing) {
  const GeneratorConfig& c = report.config;
  Json j;
  j["config"] = Json{{"seed", c.seed},
                     {"trials", c.trials},
                     {"universe_size", range_json(c.universe_size)},
                     {"cardinality", range_json(c.cardinality)},
                     {"family_size", range_json(c.family_size)},
                     {"degree_grid", c.degree_grid},
                     {"max_attempts", c.max_attempts}};
  std::size_t starved = 0;
  for (const auto& r : report.results) starved += r.starved;
  j["summary"] = Json{{"passed", report.passed()},
                      {"laws", report.results.size()},
                      {"proved", report.count(LawStatus::proved)},
                      {"refuted", report.count(LawStatus::refuted)},
                      {"violations", report.total_violations()},
                      {"starved", starved}};
  Json laws = Json::array();
  for (const LawResult& r : report.results) {
    Json law;
    law["id"] = r.id;
    law["status"] = std::string(to_string(r.status));
    law["passed"] = r.passed();
    law["trials"] = r.trials;
    law["starved"] = r.starved;
    law["violations"] = r.violations;
    Json fixtures = Json::array();
    for (const auto& f : r.fixtures) {
      Json fj = verdict_json(f.verdict);
      fj["name"] = f.name;
      fixtures.push_back(std::move(fj));
    }
    law["fixtures"] = std::move(fixtures);
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) {
      Json wj{{"trial", w.trial}};
      wj.update(verdict_json(w.verdict));
      wj["binding"] = binding_json(w.binding);
      witnesses.push_back(std::move(wj));
    }
    law["witnesses"] = std::move(witnesses);
    if (include_timing) law["elapsed_seconds"] = r.elapsed_seconds;
    laws.push_back(std::move(law));
  }
  j["laws"] = std::move(laws);
  return detail::format_json(j);
}

LawReport report_from_json(std::string_view text) {
  const Json j = parse_json(text);
  LawReport report;
  try {
    const Json& c = field(j, "config", "");
    GeneratorConfig& g = report.config;
    g.seed = field(c, "seed", "config").get<std::uint64_t>();
    g.trials = field(c, "trials", "config").get<std::size_t>();
    g.universe_size = parse_range(field(c, "universe_size", "config"), "config.universe_size");
    g.cardinality = parse_range(field(c, "cardinality", "config"), "config.cardinality");
    g.family_size = parse_range(field(c, "family_size", "config"), "config.family_size");
    g.degree_grid = field(c, "degree_grid", "config").get<std::int64_t>();
    g.max_attempts = field(c, "max_attempts", "config").get<std::size_t>();

    const Json& laws = field(j, "laws", "");
    for (std::size_t i = 0; i < laws.size(); ++i) {
      const std::string path = "laws[" + std::to_string(i) + "]";
      const Json& l = laws[i];
      LawResult r;
      r.id = field(l, "id", path).get<std::string>();
      const auto status = field(l, "status", path).get<std::string>();
      if (status != "proved" && status != "refuted") fail(path + ".status", "expected proved or refuted");
      r.status = status == "proved" ? LawStatus::proved : LawStatus::refuted;
      r.trials = field(l, "trials", path).get<std::size_t>();
      r.starved = field(l, "starved", path).get<std::size_t>();
      r.violations = field(l, "violations", path).get<std::size_t>();
      for (const Json& f : field(l, "fixtures", path))
        r.fixtures.push_back({field(f, "name", path).get<std::string>(), parse_verdict(f, path)});
      const Json& ws = field(l, "witnesses", path);
      for (std::size_t k = 0; k < ws.size(); ++k) {
        const std::string wpath = path + ".witnesses[" + std::to_string(k) + "]";
        r.witnesses.push_back(Witness{r.id, field(ws[k], "trial", wpath).get<std::uint64_t>(),
                                      parse_binding(field(ws[k], "binding", wpath), wpath + ".binding"),
                                      parse_verdict(ws[k], wpath)});
      }
      if (const auto it = l.find("elapsed_seconds"); it != l.end()) r.elapsed_seconds = it->get<double>();
      report.results.push_back(std::move(r));
    }
  } catch (const Json::exception& e) {
    throw DocumentError("", std::string("unexpected value type: ") + e.what());
  }
  return report;
}

}  // namespace hfa
