#include "hopfrad/commands.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>

#include "hopfrad/definition.hpp"
#include "hopfrad/errors.hpp"
#include "hopfrad/fixtures.hpp"
#include "hopfrad/oracle.hpp"
#include "hopfrad/radicals.hpp"
#include "json_format.hpp"

namespace hopfrad {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

RadicalOptions radical_options(const CommandOptions& o) {
  RadicalOptions r;
  r.search.seed = o.seed;
  r.search.limits.cap = o.cap;
  r.nil.limits.cap = o.cap;
  return r;
}

bool within_cap(const HModuleAlgebra& m, const CommandOptions& o) {
  if (!m.field().is_prime_field()) return false;
  try {
    EnumerationLimits lim;
    lim.cap = o.cap;
    check_enumerable(m.dim(), m.field(), lim);
    return true;
  } catch (const Error&) {
    return false;
  }
}

json integer_json(const std::string& s) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc() && p == s.data() + s.size()) return v;
  return s;
}

json subspace_json(const Subspace& s) {
  json rows = json::array();
  for (const auto& r : integer_rows(s)) {
    json row = json::array();
    for (const auto& e : r) row.push_back(integer_json(e));
    rows.push_back(row);
  }
  return {{"dim", s.dim()}, {"basis", rows}};
}

json validation_json(const ValidationReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"axiom", f.axiom}, {"indices", f.indices}, {"detail", f.detail}});
  }
  return {{"status", r.ok() ? "pass" : "fail"}, {"failures", failures}};
}

bool primitive(const json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render_text(const json& j, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' ');
  auto inline_array = [](const json& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) s += ", ";
      s += a[i].is_array() ? a[i].dump() : scalar_text(a[i]);
    }
    return s + "]";
  };
  auto flat = [](const json& a) {
    return a.is_array() && std::all_of(a.begin(), a.end(), [](const json& e) {
             return primitive(e) || (e.is_array() && std::all_of(e.begin(), e.end(), primitive));
           });
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (primitive(v)) {
        out += pad + k + ": " + scalar_text(v) + "\n";
      } else if (flat(v)) {
        out += pad + k + ": " + inline_array(v) + "\n";
      } else {
        out += pad + k + ":\n";
        render_text(v, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (primitive(v) || flat(v)) {
        out += pad + "- " + (primitive(v) ? scalar_text(v) : inline_array(v)) + "\n";
      } else {
        std::string item;
        render_text(v, indent + 2, item);
        if (v.is_object() && item.size() > indent + 2) item.replace(indent, 2, "- ");
        out += item;
      }
    }
  } else {
    out += pad + scalar_text(j) + "\n";
  }
}

std::string render(const json& j, const CommandOptions& o) {
  if (o.format == "text") {
    std::string out;
    render_text(j, 0, out);
    return out;
  }
  return compact_dump(j);
}

json header(const std::string& command, const std::string& input, const CommandOptions& o) {
  return {{"command", command}, {"input", input}, {"seed", o.seed}, {"cap", o.cap}};
}

CheckLevel level_of(const DefinitionFile& d, const CommandOptions& o) {
  return o.check_level ? *o.check_level : d.expected_level;
}

struct Validation {
  ValidationReport algebra, hopf, action;
  bool ok() const { return algebra.ok() && hopf.ok() && action.ok(); }
};

Validation validate_all(const DefinitionFile& d, CheckLevel level) {
  Validation v;
  v.algebra = validate_algebra(d.module.algebra);
  v.hopf = validate_hopf(d.module.hopf);
  v.action = validate_action(d.module, level);
  return v;
}

json validation_section(const Validation& v) {
  return {{"algebra", validation_json(v.algebra)}, {"hopf", validation_json(v.hopf)}, {"action", validation_json(v.action)}};
}

json radical_json(const RadicalResult& r) {
  json j = subspace_json(r.space);
  j["status"] = "ok";
  j["method"] = r.method;
  j["certificates"] = r.certificates;
  return j;
}

json entry_json(const RadicalEntry& e) {
  if (!e.available) return {{"status", "unsupported"}, {"reason", e.blocked_by}};
  json j = subspace_json(*e.space);
  j["status"] = "ok";
  j["method"] = e.method;
  j["certificates"] = e.certificates;
  return j;
}

json checks_json(const std::vector<CheckResult>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
  return out;
}

// Loads and validates; returns an output with a nonzero exit on failure.
std::optional<CommandOutput> load_checked(const std::string& path, const CommandOptions& o, const std::string& cmd,
                                          DefinitionFile& def) {
  try {
    def = load_definition(path);
  } catch (const ParseError& e) {
    return CommandOutput{exit_code::parse_failed, "", std::string("parse error: ") + e.what() + "\n"};
  }
  Validation v = validate_all(def, level_of(def, o));
  if (!v.ok()) {
    json rep = header(cmd, path, o);
    rep["name"] = def.name;
    rep["validation"] = validation_section(v);
    return CommandOutput{exit_code::validation_failed, render(rep, o), "definition does not validate\n"};
  }
  return std::nullopt;
}

struct Line {
  std::string status;
  std::string check;
  std::string detail;
};

std::vector<Line> regress_fixture(const fs::path& path, const CommandOptions& o) {
  std::vector<Line> lines;
  auto add = [&](std::string status, std::string check, std::string detail = {}) {
    lines.push_back({std::move(status), std::move(check), std::move(detail)});
  };
  DefinitionFile def;
  try {
    def = load_definition(path);
  } catch (const ParseError& e) {
    add("fail", "parse", e.what());
    return lines;
  }
  const HModuleAlgebra& m = def.module;
  Validation v = validate_all(def, level_of(def, o));
  auto vline = [&](const std::string& name, const ValidationReport& r) {
    std::string detail;
    if (!r.ok()) {
      const auto& f = r.failures.front();
      detail = f.axiom + " at (";
      for (std::size_t i = 0; i < f.indices.size(); ++i) detail += (i ? "," : "") + std::to_string(f.indices[i]);
      detail += ")";
    }
    add(r.ok() ? "pass" : "fail", "validate " + name, detail);
  };
  vline("algebra", v.algebra);
  vline("hopf", v.hopf);
  vline("action " + to_string(level_of(def, o)), v.action);
  if (!v.ok()) return lines;

  try {
    std::string once = serialize_definition(def);
    std::string twice = serialize_definition(parse_definition(once, path.string()));
    add(once == twice ? "pass" : "fail", "round-trip");
  } catch (const Error& e) {
    add("fail", "round-trip", e.what());
  }

  const RadicalOptions ro = radical_options(o);
  ComparisonReport rep = comparison_report(m, ro);
  for (const auto& c : rep.checks) add(c.status, c.name, c.detail);

  const bool enumerable = within_cap(m, o);
  std::optional<Subspace> intersection;
  if (enumerable) {
    try {
      intersection = semiprime_intersection(m, enumerate_h_ideals(m, ro.search.limits));
    } catch (const Error& e) {
      add("unsupported", "r_Hb = intersection of H-semiprime H-ideals", e.what());
    }
  }
  if (intersection) {
    auto it = rep.radicals.find("r_Hb");
    if (it != rep.radicals.end() && it->second.available) {
      add(*it->second.space == *intersection ? "pass" : "fail", "r_Hb = intersection of H-semiprime H-ideals",
          "dim " + std::to_string(it->second.space->dim()) + ", " + std::to_string(intersection->dim()));
    }
  }

  for (const auto& [name, s] : def.expected) {
    if (name != "r_b" && name != "r_bm") {
      auto c = is_h_ideal(m, s);
      add(c.holds ? "pass" : "fail", "expected " + name + " is an H-ideal", c.witness);
    }
    if (name == "r_Hb" && intersection) {
      add(s == *intersection ? "pass" : "fail", "expected r_Hb = intersection of H-semiprime H-ideals",
          "dim " + std::to_string(s.dim()) + ", " + std::to_string(intersection->dim()));
    }
    auto it = rep.radicals.find(name);
    if (it == rep.radicals.end() || !it->second.available) {
      add("fail", "expected " + name + " reproduced", "not computed");
    } else {
      add(*it->second.space == s ? "pass" : "fail", "expected " + name + " reproduced",
          "dim " + std::to_string(s.dim()) + ", computed " + std::to_string(it->second.space->dim()));
    }
  }

  if (enumerable) {
    try {
      OracleReport orep = run_oracle(m, ro);
      std::string detail = std::to_string(orep.h_ideals.size()) + " H-ideals";
      for (const auto& d : orep.diffs) detail += "; " + d;
      add(orep.diffs.empty() ? "pass" : "fail", "oracle parity", detail);
    } catch (const Contradiction& e) {
      add("fail", "oracle parity", e.what());
    } catch (const Error& e) {
      add("unsupported", "oracle parity", e.what());
    }
  } else {
    add("unsupported", "oracle parity", "not enumerable within the cap");
  }
  return lines;
}

}  // namespace

CommandOutput cmd_validate(const std::string& path, const CommandOptions& o) {
  DefinitionFile def;
  try {
    def = load_definition(path);
  } catch (const ParseError& e) {
    return {exit_code::parse_failed, "", std::string("parse error: ") + e.what() + "\n"};
  }
  CheckLevel level = level_of(def, o);
  Validation v = validate_all(def, level);
  json rep = header("validate", path, o);
  rep["name"] = def.name;
  rep["level"] = to_string(level);
  rep["validation"] = validation_section(v);
  rep["status"] = v.ok() ? "pass" : "fail";
  return {v.ok() ? exit_code::ok : exit_code::validation_failed, render(rep, o), ""};
}

CommandOutput cmd_radical(const std::string& path, const std::string& which, const CommandOptions& o) {
  DefinitionFile def;
  if (auto early = load_checked(path, o, "radical", def)) return *early;
  const HModuleAlgebra& m = def.module;
  const RadicalOptions ro = radical_options(o);
  json rep = header("radical", path, o);
  rep["name"] = def.name;
  rep["which"] = which;

  if (which == "all") {
    ComparisonReport cr = comparison_report(m, ro);
    json rads = json::object();
    for (const auto& [name, e] : cr.radicals) rads[name] = entry_json(e);
    rep["radicals"] = rads;
    rep["containment"] = cr.containment;
    rep["checks"] = checks_json(cr.checks);
    if (cr.radicals.count("r_b") && cr.radicals.at("r_b").available && cr.radicals.count("r_Hb") &&
        cr.radicals.at("r_Hb").available && *cr.radicals.at("r_b").space != *cr.radicals.at("r_Hb").space) {
      rep["notes"] = json::array({"r_b differs from r_Hb: the classical radical is not H-stable here"});
    }
    return {cr.all_pass() ? exit_code::ok : exit_code::contradiction, render(rep, o), ""};
  }

  std::function<RadicalResult()> fn;
  if (which == "baer") {
    fn = [&] { return h_baer_radical(m, ro); };
  } else if (which == "jacobson") {
    fn = [&] { return h_jacobson_radical(m, ro); };
  } else if (which == "brownmccoy") {
    fn = [&] { return h_brown_mccoy_radical(m, ro); };
  } else if (which == "locnil") {
    fn = [&] { return h_locally_nilpotent_radical(m, ro); };
  } else if (which == "gt") {
    fn = [&] {
      auto t = normalized_integral(m.hopf);
      if (!t) throw Unsupported("H has no normalized left integral");
      return gt_radical(m, *t, ro);
    };
  } else if (which.rfind("fisher:", 0) == 0) {
    FisherBase base;
    try {
      base = parse_fisher_base(which.substr(7));
    } catch (const ParseError& e) {
      return {exit_code::parse_failed, "", std::string("parse error: ") + e.what() + "\n"};
    }
    fn = [&m, &ro, base] { return fisher_radical(m, base, ro); };
  } else {
    return {exit_code::parse_failed, "",
            "parse error: unknown radical '" + which + "' (expected baer, jacobson, brownmccoy, gt, locnil, fisher:<base> or all)\n"};
  }

  int code = exit_code::ok;
  json result;
  std::string key = which;
  try {
    RadicalResult r = fn();
    key = r.name;
    result = radical_json(r);
  } catch (const Contradiction& e) {
    code = exit_code::contradiction;
    result = {{"status", "fail"}, {"reason", std::string("contradiction: ") + e.what()}};
  } catch (const Error& e) {
    result = {{"status", "unsupported"}, {"reason", e.what()}};
  }
  rep["radicals"] = {{key, result}};
  return {code, render(rep, o), ""};
}

CommandOutput cmd_oracle(const std::string& path, const CommandOptions& o) {
  DefinitionFile def;
  if (auto early = load_checked(path, o, "oracle", def)) return *early;
  const HModuleAlgebra& m = def.module;
  if (!m.field().is_prime_field()) return {exit_code::cap_exceeded, "", "cap exceeded: the rationals cannot be enumerated\n"};
  OracleReport orep;
  try {
    orep = run_oracle(m, radical_options(o));
  } catch (const CapExceeded& e) {
    return {exit_code::cap_exceeded, "", std::string("cap exceeded: ") + e.what() + "\n"};
  } catch (const Contradiction& e) {
    return {exit_code::contradiction, "", std::string("contradiction: ") + e.what() + "\n"};
  }
  json rep = header("oracle", path, o);
  rep["name"] = def.name;
  rep["h_ideal_count"] = orep.h_ideals.size();
  json ideals = json::array();
  for (const auto& i : orep.h_ideals) ideals.push_back(subspace_json(i));
  rep["h_ideals"] = ideals;
  json entries = json::object();
  for (const auto& e : orep.entries) {
    if (!e.available) {
      entries[e.name] = {{"status", e.blocked_by.rfind("contradiction", 0) == 0 ? "fail" : "unsupported"},
                         {"reason", e.blocked_by}};
    } else {
      entries[e.name] = {{"status", e.match ? "match" : "mismatch"},
                         {"fast", subspace_json(e.fast)},
                         {"brute", subspace_json(e.brute)}};
    }
  }
  rep["entries"] = entries;
  rep["diffs"] = orep.diffs;
  return {orep.diffs.empty() ? exit_code::ok : exit_code::contradiction, render(rep, o), ""};
}

CommandOutput cmd_regress(const std::string& dir, const CommandOptions& o) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return {exit_code::parse_failed, "", "error: not a directory: " + dir + "\n"};
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<std::vector<Line>> results(files.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(files.size()); ++i) {
    try {
      results[i] = regress_fixture(files[i], o);
    } catch (const std::exception& e) {
      results[i] = {{"fail", "internal", e.what()}};
    }
  }

  std::map<std::string, std::size_t> counts;
  bool check_failed = false;
  bool parse_failed = false;
  std::string text;
  json fixtures = json::object();
  for (std::size_t i = 0; i < files.size(); ++i) {
    const std::string stem = files[i].stem().string();
    json arr = json::array();
    for (const auto& l : results[i]) {
      ++counts[l.status];
      if (l.status == "fail") (l.check == "parse" ? parse_failed : check_failed) = true;
      std::string status = l.status;
      std::transform(status.begin(), status.end(), status.begin(), ::toupper);
      text += status + " " + stem + ": " + l.check + (l.detail.empty() ? "" : " (" + l.detail + ")") + "\n";
      arr.push_back({{"check", l.check}, {"status", l.status}, {"detail", l.detail}});
    }
    fixtures[stem] = arr;
  }

  CommandOutput out;
  if (files.empty()) out.err = "warning: no fixtures found in " + dir + "\n";
  std::string summary = std::to_string(files.size()) + " fixtures";
  for (const auto& [k, v] : counts) summary += ", " + std::to_string(v) + " " + k;
  if (o.format == "text") {
    out.out = text + "summary: " + summary + "\n";
  } else {
    json rep = header("regress", dir, o);
    rep["fixtures"] = fixtures;
    rep["summary"] = counts;
    rep["status"] = check_failed || parse_failed ? "fail" : "pass";
    out.out = compact_dump(rep);
  }
  // A failed theorem check outranks an unreadable file.
  if (check_failed) {
    out.exit_code = exit_code::contradiction;
  } else if (parse_failed) {
    out.exit_code = exit_code::parse_failed;
  }
  return out;
}

CommandOutput cmd_export_fixtures(const std::string& dir, const CommandOptions& o) {
  fs::create_directories(dir);
  json written = json::array();
  bool ok = true;
  for (auto& nf : builtin_fixtures()) {
    DefinitionFile def;
    def.name = nf.name;
    def.expected_level = nf.level;
    def.module = nf.module;
    ComparisonReport cr = comparison_report(def.module, radical_options(o));
    ok = ok && cr.all_pass();
    for (const auto& [name, e] : cr.radicals) {
      if (e.available && name != "rad(R#H)∩R") def.expected[name] = *e.space;
    }
    fs::path p = fs::path(dir) / (nf.name + ".json");
    std::ofstream(p) << serialize_definition(def);
    written.push_back(p.filename().string());
  }
  json rep = header("export-fixtures", dir, o);
  rep["written"] = written;
  return {ok ? exit_code::ok : exit_code::contradiction, render(rep, o), ""};
}

}  // namespace hopfrad
