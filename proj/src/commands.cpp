#include "hfa/commands.hpp"

#include "hfa/error.hpp"
#include "hfa/expr.hpp"
#include "hfa/ranking.hpp"
#include "hfa/report.hpp"

#include "json_format.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

namespace hfa {

using Json = nlohmann::ordered_json;

namespace {

// Terminal columns of UTF-8 text; every code point here is one column wide.
std::size_t width(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

std::string pad_right(std::string s, std::size_t w) {
  const std::size_t cur = width(s);
  if (cur < w) s.append(w - cur, ' ');
  return s;
}

std::string mean_text(const Hfe& h) {
  const Rational m = mean(h);
  return to_fraction_string(m) + " ≈ " + to_decimal_string(m, 4);
}

std::string eq_symbol(RelationKind k) { return "=" + std::string(symbol(k)).substr(std::string("⊂").size()); }

constexpr RelationKind kEqualityKinds[] = {RelationKind::possible, RelationKind::acceptable, RelationKind::mean,
                                           RelationKind::strong, RelationKind::necessary};

}  // namespace

int cmd_laws(bool json, std::ostream& out) {
  const auto& laws = law_registry();
  if (json) {
    Json j = Json::array();
    for (const Law& law : laws)
      j.push_back(Json{{"id", law.id}, {"status", std::string(to_string(law.status))}, {"statement", law.statement}});
    out << detail::format_json(j);
    return kExitOk;
  }
  std::size_t width = 0;
  for (const Law& law : laws) width = std::max(width, law.id.size());
  for (const Law& law : laws)
    out << law.id << std::string(width - law.id.size() + 2, ' ') << (law.status == LawStatus::proved ? "proved " : "refuted")
        << "  " << law.statement << '\n';
  return kExitOk;
}

int cmd_relate(const Document& doc, std::string_view a_name, std::string_view b_name, bool json, std::ostream& out) {
  const Hfs& a = doc.set(a_name);
  const Hfs& b = doc.set(b_name);
  const Universe& u = a.universe();

  if (json) {
    Json j;
    j["a"] = std::string(a_name);
    j["b"] = std::string(b_name);
    Json elements = Json::array();
    for (std::size_t i = 0; i < u.size(); ++i) {
      const RelationProfile p = relation_profile(a.at(i), b.at(i));
      Json v = Json::object();
      for (RelationKind k : kAllRelationKinds) v[std::string(1, tag(k))] = p.holds(k);
      elements.push_back(Json{{"element", u[i]},
                              {"mean_a", to_fraction_string(mean(a.at(i)))},
                              {"mean_b", to_fraction_string(mean(b.at(i)))},
                              {"verdicts", std::move(v)},
                              {"sot", std::string(to_string(p.sot))}});
    }
    j["elements"] = std::move(elements);
    Json set = Json::object();
    for (RelationKind k : kAllRelationKinds) set[std::string(1, tag(k))] = set_relation(k, a, b);
    j["set"] = std::move(set);
    Json eq = Json::object();
    for (RelationKind k : kEqualityKinds) eq[std::string(1, tag(k))] = set_equality(k, a, b);
    eq["multiset"] = a == b;
    j["equality"] = std::move(eq);
    out << detail::format_json(j);
    return kExitOk;
  }

  out << a_name << " against " << b_name << '\n';
  std::size_t w = width("element");
  for (std::size_t i = 0; i < u.size(); ++i) w = std::max(w, width(u[i]));
  out << pad_right("element", w + 2);
  for (RelationKind k : kAllRelationKinds) out << pad_right(std::string(symbol(k)), 4);
  out << "sot   " << a_name << "(x) / " << b_name << "(x)\n";
  for (std::size_t i = 0; i < u.size(); ++i) {
    const RelationProfile p = relation_profile(a.at(i), b.at(i));
    out << pad_right(u[i], w + 2);
    for (RelationKind k : kAllRelationKinds) out << pad_right(p.holds(k) ? "y" : ".", 4);
    out << pad_right(std::string(to_string(p.sot)), 6) << a.at(i).to_string() << " / " << b.at(i).to_string()
        << "   means " << mean_text(a.at(i)) << " / " << mean_text(b.at(i)) << '\n';
  }
  out << "set level:";
  for (RelationKind k : kAllRelationKinds)
    out << "  " << a_name << ' ' << symbol(k) << ' ' << b_name << (set_relation(k, a, b) ? " yes" : " no");
  out << "\nequality: ";
  for (RelationKind k : kEqualityKinds)
    out << "  " << a_name << ' ' << eq_symbol(k) << ' ' << b_name << (set_equality(k, a, b) ? " yes" : " no");
  out << "  " << a_name << " = " << b_name << (a == b ? " yes" : " no") << '\n';
  return kExitOk;
}

int cmd_ops(const Document& doc, std::string_view text, bool json, std::ostream& out) {
  const Expr expr = Expr::parse(text);
  const Hfs result = expr.eval(doc.binding());
  const Universe& u = result.universe();
  if (json) {
    Json j;
    j["expression"] = expr.to_string();
    Json elements = Json::object();
    for (std::size_t i = 0; i < u.size(); ++i) {
      Json degrees = Json::array();
      for (const Degree& d : result.at(i).degrees()) degrees.push_back(d.to_string());
      elements[u[i]] = Json{{"degrees", std::move(degrees)},
                            {"lower", result.at(i).lower().to_string()},
                            {"upper", result.at(i).upper().to_string()},
                            {"mean", to_fraction_string(mean(result.at(i)))}};
    }
    j["result"] = std::move(elements);
    out << detail::format_json(j);
    return kExitOk;
  }
  out << expr.to_string() << '\n';
  std::size_t w = 0;
  for (std::size_t i = 0; i < u.size(); ++i) w = std::max(w, width(u[i]));
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Hfe& h = result.at(i);
    out << "  " << pad_right(u[i], w) << "  " << h.to_string() << "  bounds [" << h.lower().to_string() << ", "
        << h.upper().to_string() << "]  mean " << mean_text(h) << '\n';
  }
  return kExitOk;
}

int cmd_rank(const Document& doc, std::string_view set, RelationKind kind, bool json,
             const std::optional<std::filesystem::path>& dot, std::ostream& out) {
  const RankingOutput r = rank_schemes(doc.set(set), kind);
  if (dot && *dot == "-") {
    write_dot(r, out);
    return kExitOk;
  }
  if (dot) {
    std::ofstream f(*dot);
    if (!f) throw Error("cannot write '" + dot->string() + "'");
    write_dot(r, f);
  }
  if (json) {
    out << ranking_to_json(r);
    return kExitOk;
  }
  out << "schemes of " << set << " ranked by the strict part of " << symbol(kind) << '\n';
  for (std::size_t l = 0; l < r.layers.size(); ++l) {
    out << "  layer " << l + 1 << ':';
    for (const auto& s : r.layers[l]) out << ' ' << s;
    out << '\n';
  }
  const auto list = [&](const char* label, const auto& pairs, const char* rel) {
    out << label;
    if (pairs.empty()) out << " none";
    for (const auto& [x, y] : pairs) out << "  " << x << ' ' << rel << ' ' << y;
    out << '\n';
  };
  list("ties:", r.ties, "~");
  list("unresolved:", r.unresolved, "?");
  std::size_t w = 0;
  for (const auto& s : r.schemes) w = std::max(w, width(s));
  out << "matrix (row " << symbol(kind) << " column):\n  " << std::string(w, ' ');
  for (const auto& s : r.schemes) out << ' ' << pad_right(s, w);
  out << '\n';
  for (std::size_t i = 0; i < r.schemes.size(); ++i) {
    out << "  " << pad_right(r.schemes[i], w);
    for (std::size_t j = 0; j < r.schemes.size(); ++j) out << ' ' << pad_right(r.holds[i][j] ? "y" : ".", w);
    out << '\n';
  }
  return kExitOk;
}

int cmd_check(const CheckOptions& options, std::ostream& out, std::ostream& err) {
  const LawReport report = run_suite(options.config, options.run);
  const std::string json = report_to_json(report, options.timing);
  if (options.report) {
    std::ofstream f(*options.report, std::ios::binary);
    if (!f) throw Error("cannot write '" + options.report->string() + "'");
    f << json;
  }
  if (options.json) out << json;

  std::size_t trials = 0, starved = 0, falsified = 0;
  for (const LawResult& r : report.results) {
    trials += r.trials;
    starved += r.starved;
    if (r.status == LawStatus::refuted && r.passed()) ++falsified;
    if (r.starved > 0)
      err << "warning: " << r.id << ": " << r.starved << " trial(s) found no guard-satisfying binding in "
          << options.config.max_attempts << " attempts\n";
    if (options.json) continue;
    out << (r.passed() ? "PASS  " : "FAIL  ") << r.id << "  " << to_string(r.status);
    if (r.status == LawStatus::proved) out << "  trials=" << r.trials << " violations=" << r.violations;
    else out << "  fixtures falsifying=" << std::count_if(r.fixtures.begin(), r.fixtures.end(), [](const auto& f) {
                  return f.verdict.violated();
                }) << '/' << r.fixtures.size();
    if (options.timing) out << "  " << r.elapsed_seconds << "s";
    out << '\n';
    if (!r.witnesses.empty()) write_trace(find_law(r.id), r.witnesses.front().binding, out);
  }
  if (!options.json) {
    out << report.count(LawStatus::proved) << " proved laws, " << report.total_violations() << " violation(s) in "
        << trials << " trials; " << falsified << '/' << report.count(LawStatus::refuted)
        << " refuted laws falsified by their fixtures; " << starved << " starved trial(s)\n"
        << (report.passed() ? "OK" : "FAILED") << '\n';
  }
  return report.passed() ? kExitOk : kExitFailed;
}

int cmd_counterexamples(const std::optional<std::string>& law_id, const std::optional<std::size_t>& hunt_trials,
                        std::uint64_t seed, std::ostream& out) {
  std::vector<const Law*> laws;
  if (law_id) laws.push_back(&find_law(*law_id));
  else
    for (const Law& l : law_registry())
      if (l.status == LawStatus::refuted) laws.push_back(&l);

  bool ok = true;
  for (const Law* law : laws) {
    if (law->fixtures.empty()) out << "law " << law->id << " has no fixtures\n";
    for (const Fixture& f : law->fixtures) {
      out << "== " << law->id << " on " << f.name << '\n';
      write_trace(*law, f.binding, out);
      const bool violated = evaluate_law(*law, f.binding).violated();
      if (violated != (law->status == LawStatus::refuted)) ok = false;
    }
    if (hunt_trials) {
      GeneratorConfig config;
      config.seed = seed;
      config.trials = *hunt_trials;
      const auto w = hunt_counterexample(law->id, config);
      if (!w) {
        out << "== " << law->id << ": no random witness in " << *hunt_trials << " samples\n";
        continue;
      }
      out << "== " << law->id << ": random witness at sample " << w->trial << '\n';
      write_trace(*law, w->binding, out);
      out << "binding:\n" << binding_to_json(w->binding);
      if (law->status == LawStatus::proved) ok = false;
    }
    out << '\n';
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_ingest(std::istream& scores, const std::filesystem::path& output, const std::string& set_name,
               std::ostream& out) {
  const Document doc = ingest_scores(scores, set_name);
  save_document(doc, output);
  out << "wrote " << output.string() << ": set " << set_name << " over " << doc.universe.size() << " scheme(s)\n";
  return kExitOk;
}

}  // namespace hfa
