#pragma once

#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bq/builders.hpp"
#include "bq/rational.hpp"
#include "bq/yd.hpp"

namespace bq::io {

using json = nlohmann::json;

/// Schema violation; `where` is a JSON pointer into the document.
class schema_error : public std::invalid_argument {
 public:
  schema_error(std::string where, const std::string& what)
      : std::invalid_argument(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

inline std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
inline std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

inline json to_json(const Rational& q) { return to_string(q); }

inline json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

inline Rational rational_from(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (!j.is_string()) throw schema_error(path, "expected a rational as \"p/q\" string or integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const parse_error& e) {
    throw schema_error(path, e.what());
  }
}

inline const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw schema_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw schema_error(child(path, key), "missing field");
  return *it;
}

inline Vec vec_from(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) throw schema_error(path, "expected an array of " + std::to_string(n) + " rationals");
  if (j.size() != n) throw schema_error(path, "expected length " + std::to_string(n) + ", got " + std::to_string(j.size()));
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rational_from(j[i], child(path, i));
  return v;
}

/// Array of `outer` vectors of length `inner`.
inline std::vector<Vec> vecs_from(const json& j, std::size_t outer, std::size_t inner, const std::string& path) {
  if (!j.is_array() || j.size() != outer)
    throw schema_error(path, "expected an array of " + std::to_string(outer) + " entries");
  std::vector<Vec> out;
  for (std::size_t i = 0; i < outer; ++i) out.push_back(vec_from(j[i], inner, child(path, i)));
  return out;
}

/// A length-(a*b) vector given flat or as a nested a x b array.
inline Vec tensor_from(const json& j, std::size_t a, std::size_t b, const std::string& path) {
  if (j.is_array() && j.size() == a && (a == 0 || j[0].is_array())) {
    Vec out;
    for (std::size_t i = 0; i < a; ++i) {
      const Vec row = vec_from(j[i], b, child(path, i));
      out.insert(out.end(), row.begin(), row.end());
    }
    return out;
  }
  return vec_from(j, a * b, path);
}

inline StructureAlgebra algebra_from(const json& j, const std::string& path = "") {
  const json& d = field(j, "dim", path);
  if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) throw schema_error(child(path, "dim"), "expected a positive integer");
  const std::size_t n = d.get<std::size_t>();
  const json& basis = field(j, "basis", path);
  if (!basis.is_array() || basis.size() != n) throw schema_error(child(path, "basis"), "expected " + std::to_string(n) + " labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (!basis[i].is_string()) throw schema_error(child(child(path, "basis"), i), "expected a string label");
    labels.push_back(basis[i].get<std::string>());
  }
  const Vec unit = vec_from(field(j, "unit", path), n, child(path, "unit"));
  const json& mult = field(j, "mult", path);
  const std::string mpath = child(path, "mult");
  if (!mult.is_array() || mult.size() != n) throw schema_error(mpath, "expected a dim x dim array");
  std::vector<Vec> table;
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = vecs_from(mult[i], n, n, child(mpath, i));
    table.insert(table.end(), row.begin(), row.end());
  }
  return StructureAlgebra(std::move(labels), unit, std::move(table));
}

inline json algebra_json(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  json mult = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(to_json(a.product(i, j)));
    mult.push_back(row);
  }
  return {{"dim", n}, {"basis", a.labels()}, {"unit", to_json(a.unit())}, {"mult", mult}};
}

inline HopfPtr named_hopf(const std::string& name) {
  if (name == "H4") return h4_hopf();
  if (name == "H4dual") return h4_dual();
  if (name == "E2") return e2_hopf();
  if (name == "DH4") return dh4().D;
  if (name == "kZ2") return kz2_hopf();
  throw std::invalid_argument("unknown Hopf algebra name '" + name + "' (expected H4, H4dual, E2, DH4 or kZ2)");
}

inline HopfAlgebra hopf_from(const json& j, const std::string& path = "") {
  StructureAlgebra alg = algebra_from(j, path);
  const std::size_t n = alg.dim();
  const auto coproduct = [&] {
    const json& c = field(j, "coproduct", path);
    if (!c.is_array() || c.size() != n) throw schema_error(child(path, "coproduct"), "expected dim entries");
    std::vector<Vec> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(tensor_from(c[i], n, n, child(child(path, "coproduct"), i)));
    return out;
  }();
  const Vec counit = vec_from(field(j, "counit", path), n, child(path, "counit"));
  const auto s_cols = vecs_from(field(j, "antipode", path), n, n, child(path, "antipode"));
  const Matrix S = Matrix::from_columns(n, s_cols);
  const auto S_inv = try_inverse(S);
  if (!S_inv) throw schema_error(child(path, "antipode"), "antipode is not invertible");
  std::optional<std::size_t> grouplike;
  if (j.contains("grouplike")) {
    const json& g = j["grouplike"];
    if (!g.is_number_unsigned() || g.get<std::size_t>() >= n) throw schema_error(child(path, "grouplike"), "expected a basis index");
    grouplike = g.get<std::size_t>();
  }
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "H";
  return HopfAlgebra(std::move(name), std::move(alg), coproduct, counit, S, *S_inv, grouplike);
}

inline json hopf_json(const HopfAlgebra& h) {
  json j = algebra_json(h.alg());
  j["kind"] = "hopf";
  j["name"] = h.name();
  json cop = json::array();
  for (std::size_t i = 0; i < h.dim(); ++i) cop.push_back(to_json(h.coproduct(i)));
  j["coproduct"] = cop;
  j["counit"] = to_json(h.counit());
  json s = json::array();
  for (std::size_t i = 0; i < h.dim(); ++i) s.push_back(to_json(h.antipode().col(i)));
  j["antipode"] = s;
  if (h.grouplike()) j["grouplike"] = *h.grouplike();
  return j;
}

inline HopfPtr hopf_ref_from(const json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return named_hopf(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw schema_error(path, e.what());
    }
  }
  return make_hopf(hopf_from(j, path));
}

/// YD algebra: algebra fields plus "hopf" (a builder name or an inline Hopf
/// definition), "action" (H.dim x A.dim image vectors) and "coaction"
/// (A.dim entries, each A.dim x H.dim).
inline YDAlgebra yd_from(const json& j, const std::string& path = "") {
  StructureAlgebra alg = algebra_from(j, path);
  const HopfPtr H = hopf_ref_from(field(j, "hopf", path), child(path, "hopf"));
  const std::size_t d = alg.dim(), n = H->dim();
  const json& act = field(j, "action", path);
  const std::string apath = child(path, "action");
  if (!act.is_array() || act.size() != n) throw schema_error(apath, "expected " + std::to_string(n) + " entries, one per Hopf basis element");
  std::vector<Matrix> action;
  for (std::size_t l = 0; l < n; ++l) action.push_back(Matrix::from_columns(d, vecs_from(act[l], d, d, child(apath, l))));
  const json& co = field(j, "coaction", path);
  const std::string cpath = child(path, "coaction");
  if (!co.is_array() || co.size() != d) throw schema_error(cpath, "expected " + std::to_string(d) + " entries, one per algebra basis element");
  Matrix coaction(d * n, d);
  for (std::size_t i = 0; i < d; ++i) coaction.set_col(i, tensor_from(co[i], d, n, child(cpath, i)));
  return YDAlgebra(H, std::move(alg), std::move(action), std::move(coaction));
}

inline json yd_json(const YDAlgebra& A, const std::string& hopf_name) {
  json j = algebra_json(A.alg);
  j["kind"] = "yd";
  j["hopf"] = hopf_name;
  json act = json::array();
  for (const auto& m : A.action) {
    json row = json::array();
    for (std::size_t i = 0; i < A.dim; ++i) row.push_back(to_json(m.col(i)));
    act.push_back(row);
  }
  j["action"] = act;
  json co = json::array();
  for (std::size_t i = 0; i < A.dim; ++i) co.push_back(to_json(A.coaction.col(i)));
  j["coaction"] = co;
  return j;
}

using Definition = std::variant<StructureAlgebra, HopfAlgebra, YDAlgebra>;

inline std::string kind_of(const json& j) {
  if (!j.is_object()) throw schema_error("", "expected a JSON object at top level");
  if (!j.contains("kind")) throw schema_error("/kind", "missing field (expected algebra, hopf or yd)");
  if (!j["kind"].is_string()) throw schema_error("/kind", "expected a string");
  return j["kind"].get<std::string>();
}

inline Definition definition_from(const json& j) {
  const std::string kind = kind_of(j);
  try {
    if (kind == "algebra") return algebra_from(j);
    if (kind == "hopf") return hopf_from(j);
    if (kind == "yd") return yd_from(j);
  } catch (const dimension_error& e) {
    throw schema_error("", e.what());
  }
  throw schema_error("/kind", "unknown kind '" + kind + "' (expected algebra, hopf or yd)");
}

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw schema_error("", std::string("malformed JSON: ") + e.what());
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

}  // namespace bq::io
