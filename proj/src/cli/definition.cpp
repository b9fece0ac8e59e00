#include "hopfrad/definition.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hopfrad/errors.hpp"
#include "json_format.hpp"

namespace hopfrad {

using nlohmann::json;

namespace {

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& where, const std::string& what) const {
    throw ParseError(source_ + ": " + where + ": " + what);
  }

  const json& field(const json& obj, const std::string& where, const std::string& key) const {
    if (!obj.is_object()) fail(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, "missing field '" + key + "'");
    return *it;
  }

  std::size_t index(const json& v, const std::string& where, std::size_t bound) const {
    if (!v.is_number_integer()) fail(where, "expected a non-negative integer");
    auto i = v.get<std::int64_t>();
    if (i < 0 || static_cast<std::uint64_t>(i) >= bound) {
      fail(where, "index " + std::to_string(i) + " out of range (dim " + std::to_string(bound) + ")");
    }
    return static_cast<std::size_t>(i);
  }

  std::size_t dimension(const json& obj, const std::string& where) const {
    const json& d = field(obj, where, "dim");
    if (!d.is_number_integer() || d.get<std::int64_t>() < 1 || d.get<std::int64_t>() > 4096) {
      fail(where + ".dim", "expected an integer in [1, 4096]");
    }
    return d.get<std::size_t>();
  }

  Scalar scalar(const Field& f, const json& v, const std::string& where) const {
    try {
      if (v.is_number_integer()) return f.from_int(v.get<std::int64_t>());
      if (v.is_string()) return f.parse(v.get<std::string>());
    } catch (const Error& e) {
      fail(where, e.what());
    } catch (const std::exception& e) {
      fail(where, e.what());
    }
    fail(where, "expected an integer or a string \"a/b\"");
  }

  Vector vector(const Field& f, const json& v, const std::string& where, std::size_t n) const {
    if (!v.is_array()) fail(where, "expected an array");
    if (v.size() != n) fail(where, "expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
    Vector out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(scalar(f, v[i], where + "[" + std::to_string(i) + "]"));
    return out;
  }

  template <class Fn>
  void triples(const Field& f, const json& arr, const std::string& where, std::size_t bi, std::size_t bj,
               std::size_t bk, Fn&& fn) const {
    if (!arr.is_array()) fail(where, "expected an array of [i, j, k, value]");
    for (std::size_t t = 0; t < arr.size(); ++t) {
      std::string w = where + "[" + std::to_string(t) + "]";
      const json& e = arr[t];
      if (!e.is_array() || e.size() != 4) fail(w, "expected [i, j, k, value]");
      fn(index(e[0], w + "[0]", bi), index(e[1], w + "[1]", bj), index(e[2], w + "[2]", bk),
         scalar(f, e[3], w + "[3]"));
    }
  }

  FiniteDimAlgebra algebra(const Field& f, const json& obj, const std::string& where) const {
    std::size_t n = dimension(obj, where);
    FiniteDimAlgebra a(f, n);
    if (obj.contains("mult")) {
      triples(f, obj["mult"], where + ".mult", n, n, n,
              [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& c) { a.add_structure_constant(i, j, k, c); });
    }
    if (obj.contains("unit") && !obj["unit"].is_null()) a.set_unit(vector(f, obj["unit"], where + ".unit", n));
    return a;
  }

 private:
  std::string source_;
};

json scalar_json(const Scalar& s) {
  if (s.modulus() != 0) return s.residue_value();
  return s.to_string();
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(scalar_json(s));
  return out;
}

json algebra_json(const FiniteDimAlgebra& a) {
  json out;
  out["dim"] = a.dim();
  json mult = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vector& p = a.basis_product(i, j);
      for (std::size_t k = 0; k < a.dim(); ++k) {
        if (!p[k].is_zero()) mult.push_back({i, j, k, scalar_json(p[k])});
      }
    }
  out["mult"] = mult;
  if (a.unit()) out["unit"] = vector_json(*a.unit());
  return out;
}

}  // namespace

DefinitionFile parse_definition(const std::string& text, const std::string& source) {
  Reader rd(source);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
  if (!doc.is_object()) rd.fail("<root>", "expected a JSON object");

  const json& version = rd.field(doc, "<root>", "schema_version");
  if (!version.is_number_integer() || version.get<std::int64_t>() != 1) {
    rd.fail("schema_version", "unsupported schema version (expected 1)");
  }

  DefinitionFile def;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) rd.fail("name", "expected a string");
    def.name = doc["name"].get<std::string>();
  }
  if (doc.contains("expected_level")) {
    try {
      def.expected_level = parse_check_level(doc["expected_level"].get<std::string>());
    } catch (const std::exception& e) {
      rd.fail("expected_level", e.what());
    }
  }

  const json& field_obj = rd.field(doc, "<root>", "field");
  const json& kind = rd.field(field_obj, "field", "kind");
  Field f;
  if (kind == "rationals") {
    f = Field::rationals();
  } else if (kind == "prime") {
    const json& p = rd.field(field_obj, "field", "p");
    if (!p.is_number_unsigned()) rd.fail("field.p", "expected a positive integer");
    try {
      f = Field::prime(p.get<std::uint32_t>());
    } catch (const Error& e) {
      rd.fail("field.p", e.what());
    }
  } else {
    rd.fail("field.kind", "expected \"rationals\" or \"prime\"");
  }

  HModuleAlgebra& m = def.module;
  m.algebra = rd.algebra(f, rd.field(doc, "<root>", "algebra"), "algebra");

  const json& hj = rd.field(doc, "<root>", "hopf");
  m.hopf.algebra = rd.algebra(f, hj, "hopf");
  const std::size_t hd = m.hopf.dim();
  m.hopf.comult.assign(hd, vec::zeros(f, hd * hd));
  rd.triples(f, rd.field(hj, "hopf", "comult"), "hopf.comult", hd, hd, hd,
             [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& c) { m.hopf.comult[i][j * hd + k] += c; });
  m.hopf.counit = rd.vector(f, rd.field(hj, "hopf", "counit"), "hopf.counit", hd);
  const json& anti = rd.field(hj, "hopf", "antipode");
  if (!anti.is_array() || anti.size() != hd) rd.fail("hopf.antipode", "expected " + std::to_string(hd) + " rows");
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < hd; ++i) cols.push_back(rd.vector(f, anti[i], "hopf.antipode[" + std::to_string(i) + "]", hd));
  m.hopf.antipode = Matrix::from_columns(f, cols, hd);

  const std::size_t n = m.algebra.dim();
  m.action.assign(hd * n, vec::zeros(f, n));
  rd.triples(f, rd.field(doc, "<root>", "action"), "action", hd, n, n,
             [&](std::size_t h, std::size_t r, std::size_t k, const Scalar& c) { m.action[h * n + r][k] += c; });

  if (doc.contains("expected")) {
    const json& ex = doc["expected"];
    if (!ex.is_object()) rd.fail("expected", "expected an object of radical name to rows");
    for (const auto& [key, rows] : ex.items()) {
      std::string w = "expected." + key;
      if (!rows.is_array()) rd.fail(w, "expected an array of rows");
      std::vector<Vector> vs;
      for (std::size_t i = 0; i < rows.size(); ++i) vs.push_back(rd.vector(f, rows[i], w + "[" + std::to_string(i) + "]", n));
      def.expected[key] = Subspace::span(f, vs, n);
    }
  }
  return def;
}

DefinitionFile load_definition(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_definition(ss.str(), path.string());
}

std::vector<std::vector<std::string>> integer_rows(const Subspace& s) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : s.basis()) {
    std::vector<std::string> r;
    if (s.field().is_prime_field()) {
      for (const auto& c : row) r.push_back(std::to_string(c.residue_value()));
    } else {
      mpz_class l = 1;
      for (const auto& c : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational_value().get_den_mpz_t());
      for (const auto& c : row) {
        mpz_class v = c.rational_value().get_num() * (l / c.rational_value().get_den());
        r.push_back(v.get_str());
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string serialize_definition(const DefinitionFile& def) {
  const HModuleAlgebra& m = def.module;
  const Field& f = m.field();
  json doc;
  doc["schema_version"] = 1;
  doc["name"] = def.name;
  doc["expected_level"] = to_string(def.expected_level);
  if (f.is_rational()) {
    doc["field"] = {{"kind", "rationals"}};
  } else {
    doc["field"] = {{"kind", "prime"}, {"p", f.characteristic()}};
  }
  doc["algebra"] = algebra_json(m.algebra);

  json h = algebra_json(m.hopf.algebra);
  const std::size_t hd = m.hopf_dim();
  json comult = json::array();
  for (std::size_t i = 0; i < hd; ++i)
    for (std::size_t j = 0; j < hd; ++j)
      for (std::size_t k = 0; k < hd; ++k) {
        const Scalar& c = m.hopf.comult[i][j * hd + k];
        if (!c.is_zero()) comult.push_back({i, j, k, scalar_json(c)});
      }
  h["comult"] = comult;
  h["counit"] = vector_json(m.hopf.counit);
  json anti = json::array();
  for (std::size_t i = 0; i < hd; ++i) anti.push_back(vector_json(m.hopf.antipode.column(i)));
  h["antipode"] = anti;
  doc["hopf"] = h;

  json action = json::array();
  for (std::size_t hi = 0; hi < hd; ++hi)
    for (std::size_t r = 0; r < m.dim(); ++r) {
      const Vector& v = m.basis_action(hi, r);
      for (std::size_t k = 0; k < m.dim(); ++k) {
        if (!v[k].is_zero()) action.push_back({hi, r, k, scalar_json(v[k])});
      }
    }
  doc["action"] = action;

  if (!def.expected.empty()) {
    json ex = json::object();
    for (const auto& [name, s] : def.expected) {
      json rows = json::array();
      for (const auto& row : s.basis()) rows.push_back(vector_json(row));
      ex[name] = rows;
    }
    doc["expected"] = ex;
  }
  return compact_dump(doc);
}

}  // namespace hopfrad
