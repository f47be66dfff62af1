#include "locmouf/serialize.hpp"

#include <fstream>
#include <set>

namespace locmouf {

Json to_json(const Check& c) {
  Json w = Json::object();
  for (const auto& [k, v] : c.witness) w[k] = v;
  return Json{{"name", c.name},           {"pass", c.pass},         {"required", c.required},
              {"evaluated", c.evaluated}, {"failures", c.failures}, {"witness", w},
              {"note", c.note}};
}

Json to_json(const VerifyReport& r) {
  Json out = Json::array();
  for (const auto& c : r.checks()) out.push_back(to_json(c));
  return out;
}

Json moufang_to_json(const FinMoufang& m) {
  Json u = Json::array();
  for (const auto& g : m.u_inf()) u.push_back(g.table());
  return Json{{"schema", kSchemaVersion}, {"points", m.data().points}, {"classes", m.data().classes},
              {"u_inf", u},               {"tau", m.tau().table()},   {"infinity", m.inf()}};
}

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& why) { throw SchemaError(where + ": " + why); }

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("/") + key, "missing");
  return *it;
}

Index index_at(const Json& v, std::size_t n, const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    bad(where, "expected a non-negative integer");
  const auto x = v.get<unsigned long long>();
  if (x >= n) bad(where, "index " + std::to_string(x) + " out of range");
  return static_cast<Index>(x);
}

Perm perm_at(const Json& v, std::size_t n, const std::string& where) {
  if (!v.is_array()) bad(where, "expected an array");
  if (v.size() != n) bad(where, "length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
  std::vector<Index> t;
  t.reserve(n);
  for (std::size_t i = 0; i < n; ++i) t.push_back(index_at(v[i], n, where + "/" + std::to_string(i)));
  if (!Perm::is_bijection(t)) bad(where, "not a bijection");
  return Perm::from_table(std::move(t));
}

}  // namespace

std::pair<MoufangData, std::optional<Index>> moufang_data_from_json(const Json& j) {
  if (!j.is_object()) bad("/", "expected an object");
  if (auto it = j.find("schema"); it != j.end() && (!it->is_number_integer() || it->get<int>() != kSchemaVersion))
    bad("/schema", "unsupported schema version");

  MoufangData d;
  const Json& pts = field(j, "points");
  if (!pts.is_array()) bad("/points", "expected an array");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!pts[i].is_string()) bad("/points/" + std::to_string(i), "expected a string");
    if (!seen.insert(pts[i].get<std::string>()).second) bad("/points/" + std::to_string(i), "duplicate label");
    d.points.push_back(pts[i].get<std::string>());
  }
  const std::size_t n = d.points.size();
  if (n == 0) bad("/points", "empty");

  const Json& cls = field(j, "classes");
  if (!cls.is_array()) bad("/classes", "expected an array");
  for (std::size_t i = 0; i < cls.size(); ++i) {
    const std::string at = "/classes/" + std::to_string(i);
    if (!cls[i].is_array()) bad(at, "expected an array");
    std::vector<Index> c;
    for (std::size_t k = 0; k < cls[i].size(); ++k) c.push_back(index_at(cls[i][k], n, at + "/" + std::to_string(k)));
    d.classes.push_back(std::move(c));
  }

  const Json& u = field(j, "u_inf");
  if (!u.is_array()) bad("/u_inf", "expected an array");
  for (std::size_t i = 0; i < u.size(); ++i) d.u_inf.push_back(perm_at(u[i], n, "/u_inf/" + std::to_string(i)));
  d.tau = perm_at(field(j, "tau"), n, "/tau");

  std::optional<Index> inf;
  if (auto it = j.find("infinity"); it != j.end()) inf = index_at(*it, n, "/infinity");
  return {std::move(d), inf};
}

FinMoufang moufang_from_json(const Json& j) {
  auto [d, inf] = moufang_data_from_json(j);
  return FinMoufang::build(std::move(d), inf);
}

FinMoufang parse_moufang_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path + ": cannot open");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& ex) {
    throw SchemaError("/: malformed JSON (" + std::string(ex.what()) + ")");
  }
  return moufang_from_json(j);
}

Json pair_tables(const JordanPair& v) {
  Json out{{"name", v.name()}};
  for (Side s : {Side::plus, Side::minus}) {
    const auto& m = v.module(s);
    const std::string suffix = s == Side::plus ? "plus" : "minus";
    Json add = Json::array();
    for (Elem a = 0; a < m.size(); ++a) {
      Json row = Json::array();
      for (Elem b = 0; b < m.size(); ++b) row.push_back(m.add(a, b));
      add.push_back(std::move(row));
    }
    Json q = Json::array();
    for (Elem x = 0; x < m.size(); ++x) {
      Json row = Json::array();
      for (Elem y = 0; y < v.size(-s); ++y) row.push_back(v.q(s, x, y));
      q.push_back(std::move(row));
    }
    out["elements_" + suffix] = m.labels();
    out["add_" + suffix] = std::move(add);
    out["q_" + suffix] = std::move(q);
  }
  return out;
}

}  // namespace locmouf
