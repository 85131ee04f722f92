#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "orthokit/core/orthoset.hpp"
#include "orthokit/dagger/instances.hpp"
#include "orthokit/error.hpp"
#include "orthokit/hermitian/space.hpp"
#include "orthokit/maps/ortho_map.hpp"
#include "orthokit/report.hpp"

namespace orthokit::io {

using json = nlohmann::json;

// A position inside an input document, printed as file:/json/pointer.
class Loc {
 public:
  explicit Loc(std::string file, std::string pointer = {}) : file_(std::move(file)), ptr_(std::move(pointer)) {}

  Loc operator[](const std::string& key) const { return Loc(file_, ptr_ + "/" + key); }
  Loc operator[](std::size_t i) const { return Loc(file_, ptr_ + "/" + std::to_string(i)); }
  std::string str() const { return file_ + ":" + (ptr_.empty() ? "/" : ptr_); }

  [[noreturn]] void fail(const std::string& msg) const { throw invalid_input(str() + ": " + msg); }

 private:
  std::string file_;
  std::string ptr_;
};

inline json parse_text(const std::string& text, const std::string& file) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw invalid_input(file + ": malformed JSON: " + e.what());
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input(path + ": cannot read file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

inline const json& field(const json& j, const std::string& key, const Loc& at) {
  if (!j.is_object()) at.fail("expected an object");
  auto it = j.find(key);
  if (it == j.end()) at.fail("missing field \"" + key + "\"");
  return *it;
}

inline std::size_t as_index(const json& j, const Loc& at) {
  if (!j.is_number_integer() || j.get<long long>() < 0) at.fail("expected a non-negative integer");
  return j.get<std::size_t>();
}

inline const json& as_array(const json& j, const Loc& at) {
  if (!j.is_array()) at.fail("expected an array");
  return j;
}

// Wraps the constructors' own validation with the location of the payload.
template <class F>
auto located(const Loc& at, F&& f) {
  try {
    return f();
  } catch (const invalid_input& e) {
    at.fail(e.what());
  }
}

// ---- orthosets and maps ----

inline FiniteOrthoset orthoset_from_json(const json& j, const Loc& at) {
  const std::size_t n = as_index(field(j, "n", at), at["n"]);
  std::vector<FiniteOrthoset::Edge> edges;
  if (j.contains("edges")) {
    const auto& es = as_array(j["edges"], at["edges"]);
    for (std::size_t k = 0; k < es.size(); ++k) {
      const Loc ek = at["edges"][k];
      if (!es[k].is_array() || es[k].size() != 2) ek.fail("an edge is a pair [i, j]");
      const std::size_t i = as_index(es[k][0], ek[0]), j = as_index(es[k][1], ek[1]);
      if (i >= n || j >= n) ek.fail("edge out of range for n=" + std::to_string(n));
      if (i == j && i != 0) ek.fail("element " + std::to_string(i) + " is orthogonal to itself");
      edges.emplace_back(i, j);
    }
  }
  return located(at["n"], [&] { return validate_orthoset(n, edges); });
}

inline json to_json(Subset s) {
  json out = json::array();
  s.for_each([&](std::size_t x) { out.push_back(x); });
  return out;
}

inline json to_json(const FiniteOrthoset& X) {
  json edges = json::array();
  for (auto [i, j] : X.edges()) edges.push_back({i, j});
  return {{"n", X.size()}, {"edges", edges}};
}

inline std::vector<std::size_t> table_from_json(const json& j, const Loc& at) {
  std::vector<std::size_t> t;
  const auto& a = as_array(j, at);
  for (std::size_t k = 0; k < a.size(); ++k) t.push_back(as_index(a[k], at[k]));
  return t;
}

inline OrthoMap map_from_json(const json& j, const Loc& at) {
  auto dom = orthoset_from_json(field(j, "dom", at), at["dom"]);
  auto cod = orthoset_from_json(field(j, "cod", at), at["cod"]);
  auto t = table_from_json(field(j, "table", at), at["table"]);
  return located(at["table"], [&] { return OrthoMap(std::move(dom), std::move(cod), std::move(t)); });
}

inline json to_json(const OrthoMap& f) {
  return {{"dom", to_json(f.dom())}, {"cod", to_json(f.cod())}, {"table", f.table()}};
}

// ---- Hermitian payloads ----

enum class Field { rational, gaussian };

inline Field field_of(const json& j, const Loc& at) {
  if (!j.is_object() || !j.contains("field")) return Field::rational;
  const auto& f = j["field"];
  if (f == "Q") return Field::rational;
  if (f == "Q(i)") return Field::gaussian;
  at["field"].fail("field must be \"Q\" or \"Q(i)\"");
}

template <class S>
S scalar_from_json(const json& j, const Loc& at) {
  if (j.is_number_integer()) return S(Rational(j.get<long>()));
  if (!j.is_string()) at.fail("a scalar is a string such as \"1/2\" or \"1/2+3/4 i\", or an integer");
  return located(at, [&] { return scalar_traits<S>::parse(j.get<std::string>()); });
}

template <class S>
std::string scalar_text(const S& s) {
  return scalar_traits<S>::format(s);
}

template <class S>
Vec<S> vector_from_json(const json& j, const Loc& at) {
  Vec<S> v;
  const auto& a = as_array(j, at);
  for (std::size_t k = 0; k < a.size(); ++k) v.push_back(scalar_from_json<S>(a[k], at[k]));
  return v;
}

template <class S>
Matrix<S> matrix_from_json(const json& j, const Loc& at) {
  const auto& rows = as_array(j, at);
  if (rows.empty()) at.fail("matrix has no rows");
  std::vector<Vec<S>> rs;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    rs.push_back(vector_from_json<S>(rows[r], at[r]));
    if (rs.back().size() != rs.front().size()) at[r].fail("rows have different lengths");
  }
  Matrix<S> m(rs.size(), rs.front().size());
  for (std::size_t r = 0; r < rs.size(); ++r)
    for (std::size_t c = 0; c < rs[r].size(); ++c) m(r, c) = rs[r][c];
  return m;
}

// A map matrix may be empty when a side has dimension 0.
template <class S>
Matrix<S> map_matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const Loc& at) {
  if (rows == 0 || cols == 0) {
    if (!j.is_array() || !(j.empty() || j.size() == rows)) at.fail("expected the empty matrix []");
    return Matrix<S>(rows, cols);
  }
  auto m = matrix_from_json<S>(j, at);
  if (m.rows() != rows || m.cols() != cols)
    at.fail("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
            std::to_string(rows) + "x" + std::to_string(cols));
  return m;
}

// {"gram": [[...]]}, {"dim": n} (standard form) or a bare n.
template <class S>
HermitianSpace<S> space_from_json(const json& j, const Loc& at) {
  if (j.is_number_integer()) return HermitianSpace<S>::standard(as_index(j, at));
  if (j.is_object() && j.contains("dim") && !j.contains("gram"))
    return HermitianSpace<S>::standard(as_index(j["dim"], at["dim"]));
  auto g = matrix_from_json<S>(field(j, "gram", at), at["gram"]);
  return located(at["gram"], [&] { return HermitianSpace<S>(std::move(g)); });
}

template <class S>
LinearMap<S> linear_map_from_json(const json& j, const Loc& at) {
  auto dom = space_from_json<S>(field(j, "dom", at), at["dom"]);
  auto cod = space_from_json<S>(field(j, "cod", at), at["cod"]);
  auto m = map_matrix_from_json<S>(field(j, "matrix", at), cod.dim(), dom.dim(), at["matrix"]);
  return LinearMap<S>(std::move(dom), std::move(cod), std::move(m));
}

template <class S>
std::vector<Vec<S>> vectors_from_json(const json& j, std::size_t dim, const Loc& at) {
  std::vector<Vec<S>> out;
  const auto& a = as_array(j, at);
  for (std::size_t k = 0; k < a.size(); ++k) {
    out.push_back(vector_from_json<S>(a[k], at[k]));
    if (out.back().size() != dim) at[k].fail("vector length differs from the space dimension " + std::to_string(dim));
  }
  return out;
}

template <class S>
json to_json(const Vec<S>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_text(x));
  return out;
}

template <class S>
json to_json(const Matrix<S>& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

template <class S>
json to_json(const Subspace<S>& s) {
  json out = json::array();
  for (const auto& v : s.vectors()) out.push_back(to_json(v));
  return out;
}

// ---- category instances ----

using AnyInstance = std::variant<dagger::OrthosetInstance, dagger::HermitianInstance<Rational>,
                                 dagger::HermitianInstance<GaussianRational>>;

struct InstanceOptions {
  std::size_t bruteforce_max = 4;
};

namespace detail {

inline std::size_t object_ref(const json& j, const std::vector<std::string>& names, const Loc& at) {
  if (j.is_string()) {
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k] == j.get<std::string>()) return k;
    at.fail("no object named \"" + j.get<std::string>() + "\"");
  }
  const std::size_t k = as_index(j, at);
  if (k >= names.size()) at.fail("object index out of range");
  return k;
}

template <class T>
typename T::morphism morphism_payload(const json& j, const typename T::object& a, const typename T::object& b,
                                      const Loc& at) {
  if constexpr (std::is_same_v<T, dagger::OrthosetTheory>) {
    auto t = table_from_json(field(j, "table", at), at["table"]);
    return located(at["table"], [&] { return OrthoMap(a, b, std::move(t)).table(); });
  } else {
    using S = typename T::object::scalar_type;
    return map_matrix_from_json<S>(field(j, "matrix", at), b.dim(), a.dim(), at["matrix"]);
  }
}

struct ListedMorphism {
  std::size_t dom, cod, index;
};

template <class T>
dagger::CategoryInstance<T> build_instance(const json& doc, const Loc& at, const InstanceOptions& opt) {
  using namespace dagger;
  CategoryInstance<T> C;
  const auto& objs = as_array(field(doc, "objects", at), at["objects"]);
  if (objs.empty()) at["objects"].fail("an instance needs at least one object");
  const std::string homs = doc.value("homs", std::string("listed"));
  std::vector<std::string> names;
  std::vector<typename T::object> payloads;
  for (std::size_t k = 0; k < objs.size(); ++k) {
    const Loc ok = at["objects"][k];
    names.push_back(objs[k].value("name", "X" + std::to_string(k)));
    if constexpr (std::is_same_v<T, OrthosetTheory>) {
      payloads.push_back(orthoset_from_json(objs[k], ok));
    } else {
      using S = typename T::object::scalar_type;
      payloads.push_back(space_from_json<S>(objs[k], ok));
    }
  }
  if (homs == "adjointable") {
    if constexpr (std::is_same_v<T, OrthosetTheory>) {
      std::vector<NamedOrthoset> named;
      for (std::size_t k = 0; k < payloads.size(); ++k) named.push_back({payloads[k], names[k]});
      C = adjointable_instance(named, opt.bruteforce_max);
    } else {
      at["homs"].fail("\"adjointable\" needs orthoset objects");
    }
  } else if (homs == "standard") {
    if constexpr (std::is_same_v<T, OrthosetTheory>) {
      at["homs"].fail("\"standard\" needs Hermitian objects");
    } else {
      using S = typename T::object::scalar_type;
      std::vector<std::size_t> dims;
      for (std::size_t k = 0; k < payloads.size(); ++k) {
        if (!(payloads[k] == HermitianSpace<S>::standard(payloads[k].dim())))
          at["objects"][k].fail("\"standard\" hom-sets need the standard form");
        dims.push_back(payloads[k].dim());
      }
      C = standard_hermitian_instance<S>(dims);
    }
  } else if (homs == "listed") {
    for (std::size_t k = 0; k < payloads.size(); ++k) C.add_object(payloads[k], names[k]);
  } else {
    at["homs"].fail("homs must be \"listed\", \"adjointable\" or \"standard\"");
  }

  std::vector<ListedMorphism> listed;
  if (doc.contains("morphisms")) {
    const auto& ms = as_array(doc["morphisms"], at["morphisms"]);
    for (std::size_t k = 0; k < ms.size(); ++k) {
      const Loc mk = at["morphisms"][k];
      const std::size_t a = object_ref(field(ms[k], "dom", mk), names, mk["dom"]);
      const std::size_t b = object_ref(field(ms[k], "cod", mk), names, mk["cod"]);
      auto m = morphism_payload<T>(ms[k], C.obj(a), C.obj(b), mk);
      listed.push_back({a, b, C.add_morphism(a, b, std::move(m))});
    }
  }
  if (doc.contains("dagger")) {
    const auto& ds = as_array(doc["dagger"], at["dagger"]);
    for (std::size_t k = 0; k < ds.size(); ++k) {
      const Loc dk = at["dagger"][k];
      if (!ds[k].is_array() || ds[k].size() != 2) dk.fail("a dagger pairing is [m, m*] by morphism index");
      const std::size_t i = as_index(ds[k][0], dk[0]), j = as_index(ds[k][1], dk[1]);
      if (i >= listed.size() || j >= listed.size()) dk.fail("morphism index out of range");
      if (listed[i].dom != listed[j].cod || listed[i].cod != listed[j].dom) dk.fail("m* must go the other way");
      C.set_dagger(listed[i].dom, listed[i].cod, listed[i].index, listed[j].index);
    }
  }
  if (doc.contains("witnesses")) {
    const auto& ws = as_array(doc["witnesses"], at["witnesses"]);
    for (std::size_t k = 0; k < ws.size(); ++k) {
      const Loc wk = at["witnesses"][k];
      BiproductWitness<T> w;
      w.left = object_ref(field(ws[k], "left", wk), names, wk["left"]);
      w.right = object_ref(field(ws[k], "right", wk), names, wk["right"]);
      w.carrier = object_ref(field(ws[k], "carrier", wk), names, wk["carrier"]);
      w.label = ws[k].value("label", "w" + std::to_string(k));
      const auto coprojection = [&](const char* key, std::size_t from) {
        const json& p = field(ws[k], key, wk);
        if (p.is_number_integer()) {
          const std::size_t i = as_index(p, wk[key]);
          if (i >= listed.size()) wk[key].fail("morphism index out of range");
          if (listed[i].dom != from || listed[i].cod != w.carrier) wk[key].fail("coprojection has the wrong type");
          return C.hom(from, w.carrier)[listed[i].index];
        }
        return morphism_payload<T>(p, C.obj(from), C.obj(w.carrier), wk[key]);
      };
      w.inl = coprojection("inl", w.left);
      w.inr = coprojection("inr", w.right);
      C.add_witness(std::move(w));
    }
  }
  return C;
}

}  // namespace detail

// Objects are tagged "orthoset" or "hermitian"; one instance holds one kind
// (and one field).
inline AnyInstance instance_from_json(const json& doc, const Loc& at, const InstanceOptions& opt = {}) {
  const auto& objs = as_array(field(doc, "objects", at), at["objects"]);
  std::string kind;
  Field fld = Field::rational;
  for (std::size_t k = 0; k < objs.size(); ++k) {
    const Loc ok = at["objects"][k];
    const json& tag = field(objs[k], "kind", ok);
    if (tag != "orthoset" && tag != "hermitian") ok["kind"].fail("kind must be \"orthoset\" or \"hermitian\"");
    const Field f = field_of(objs[k], ok);
    if (k == 0) {
      kind = tag.get<std::string>();
      fld = f;
    } else if (tag != kind) {
      ok["kind"].fail("an instance cannot mix orthosets and Hermitian spaces");
    } else if (kind == "hermitian" && f != fld) {
      ok["field"].fail("all Hermitian objects must share one field");
    }
  }
  if (kind == "orthoset") return detail::build_instance<dagger::OrthosetTheory>(doc, at, opt);
  if (fld == Field::rational) return detail::build_instance<dagger::HermitianTheory<Rational>>(doc, at, opt);
  return detail::build_instance<dagger::HermitianTheory<GaussianRational>>(doc, at, opt);
}

// ---- reports ----

inline json to_json(const CheckResult& c) {
  return {{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}, {"witness", c.witness}};
}

// {"verb", "passed", "result", "checks", "timing_ms"}; timing is the only
// field that varies between runs.
inline json report_json(const std::string& verb, const Report& r, json result = json::object()) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  json timing = json::object();
  for (const auto& [k, v] : r.timing_ms) timing[k] = v;
  return {{"verb", verb}, {"passed", r.passed()}, {"result", std::move(result)}, {"checks", std::move(checks)},
          {"timing_ms", std::move(timing)}};
}

}  // namespace orthokit::io
