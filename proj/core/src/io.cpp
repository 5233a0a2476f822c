// Copyright 2026 The Starlift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "starlift/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#ifndef STARLIFT_VERSION
#define STARLIFT_VERSION "0.0.0"
#endif

namespace starlift::io {

namespace {

std::string key_path(const std::string& path, const std::string& key) {
  return path + "." + key;
}

std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const char* type_name(const Json& j) { return j.type_name(); }

void require_object(const Json& j, const std::string& path,
                    std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) {
    throw SchemaError(path, std::string("expected an object, got ") +
                                type_name(j));
  }
  std::set<std::string> known;
  for (const char* k : required) {
    known.insert(k);
    if (!j.contains(k)) {
      throw SchemaError(key_path(path, k),
                        std::string("missing required field \"") + k + "\"");
    }
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& item : j.items()) {
    if (!known.count(item.key())) {
      throw SchemaError(key_path(path, item.key()),
                        "unknown field \"" + item.key() + "\"");
    }
  }
}

long long get_int(const Json& j, const std::string& path, long long lo,
                  long long hi) {
  if (!j.is_number_integer()) {
    throw SchemaError(path, std::string("expected an integer, got ") +
                                type_name(j));
  }
  const long long v = j.get<long long>();
  if (v < lo || v > hi) {
    throw SchemaError(path, "integer " + std::to_string(v) +
                                " out of range [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  }
  return v;
}

double get_double(const Json& j, const std::string& path) {
  if (!j.is_number()) {
    throw SchemaError(path,
                      std::string("expected a number, got ") + type_name(j));
  }
  return j.get<double>();
}

bool get_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) {
    throw SchemaError(path,
                      std::string("expected a boolean, got ") + type_name(j));
  }
  return j.get<bool>();
}

std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) {
    throw SchemaError(path,
                      std::string("expected a string, got ") + type_name(j));
  }
  return j.get<std::string>();
}

const Json& get_array(const Json& j, const std::string& path) {
  if (!j.is_array()) {
    throw SchemaError(path,
                      std::string("expected an array, got ") + type_name(j));
  }
  return j;
}

// Wraps library validation failures with the document path.
template <typename F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const InputError& e) {
    throw SchemaError(path, e.what());
  }
}

std::vector<CMat> load_matrix_list(const Json& j, const std::string& path) {
  std::vector<CMat> out;
  const Json& arr = get_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(load_matrix(arr[i], index_path(path, i)).values());
  }
  return out;
}

Json save_matrix_list(const std::vector<CMat>& ms) {
  Json arr = Json::array();
  for (const auto& m : ms) arr.push_back(save_matrix(m));
  return arr;
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void dump(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      // nlohmann::json stores objects in a std::map, so iteration is sorted.
      out += "{\n";
      bool first = true;
      for (const auto& item : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(item.key()).dump() + ": ";
        dump(item.value(), indent + 1, out);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      const bool scalar_row = std::all_of(j.begin(), j.end(), [](const Json& e) {
        return e.is_primitive();
      });
      if (scalar_row) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump(j[i], indent + 1, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        dump(j[i], indent + 1, out);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    case Json::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      return;
    case Json::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      return;
    default:
      out += j.dump();
      return;
  }
}

// Sizes of a full block-diagonal algebra whose span is given, or empty.
std::vector<Eigen::Index> infer_blocks(const StarAlgebra& a) {
  const Eigen::Index n = a.n();
  // Union-find over coordinates linked by a nonzero entry of some element.
  std::vector<Eigen::Index> parent(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](Eigen::Index x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const auto& m : a.span()) {
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c)
        if (std::abs(m(r, c)) > 1e-12)
          parent[static_cast<std::size_t>(find(r))] = find(c);
  }
  std::vector<Eigen::Index> sizes;
  Eigen::Index start = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    // Blocks must be contiguous: a block ends when no later index joins it.
    bool closes = true;
    for (Eigen::Index j = i + 1; j < n && closes; ++j)
      for (Eigen::Index k = start; k <= i; ++k)
        if (find(j) == find(k)) closes = false;
    if (closes) {
      sizes.push_back(i - start + 1);
      start = i + 1;
    }
  }
  Eigen::Index total = 0;
  for (auto s : sizes) total += s * s;
  if (total != a.dim()) return {};
  return sizes;
}

NormMode load_norm_mode(const Json& j, const std::string& path) {
  return at_path(path, [&] { return parse_norm_mode(get_string(j, path)); });
}

}  // namespace

const char* version() { return STARLIFT_VERSION; }

SchemaError::SchemaError(std::string where, const std::string& message)
    : InputError("schema error at " + where + ": " + message),
      where_(std::move(where)) {}

std::string canonical_dump(const Json& value) {
  std::string out;
  dump(value, 0, out);
  out += "\n";
  return out;
}

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Recover line and column from the byte offset.
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t i = 0; i + 1 < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SchemaError(source + ":" + std::to_string(line) + ":" +
                          std::to_string(col),
                      "invalid JSON");
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

void write_file(const std::string& path, const Json& value) {
  const std::string text = canonical_dump(value);
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

Json save_matrix(const CMat& m) { return save_matrix(Matrix::infer(m)); }

Json save_matrix(const Matrix& m) {
  Json data = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Complex z = m.values()(r, c);
      data.push_back(Json::array({z.real(), z.imag()}));
    }
  }
  return Json{{"rows", m.rows()},
              {"cols", m.cols()},
              {"field", to_string(m.field())},
              {"data", data}};
}

Matrix load_matrix(const Json& j, const std::string& path) {
  require_object(j, path, {"rows", "cols", "field", "data"});
  const auto rows = get_int(j["rows"], key_path(path, "rows"), 0, 1 << 16);
  const auto cols = get_int(j["cols"], key_path(path, "cols"), 0, 1 << 16);
  const std::string field = get_string(j["field"], key_path(path, "field"));
  if (field != "R" && field != "C") {
    throw SchemaError(key_path(path, "field"),
                      "field must be \"R\" or \"C\", got \"" + field + "\"");
  }
  const bool real = field == "R";
  const std::string dpath = key_path(path, "data");
  const Json& data = get_array(j["data"], dpath);
  if (data.size() != static_cast<std::size_t>(rows * cols)) {
    throw SchemaError(dpath, "expected " + std::to_string(rows * cols) +
                                 " entries, got " +
                                 std::to_string(data.size()));
  }
  CMat values(rows, cols);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::string epath = index_path(dpath, i);
    const Json& e = data[i];
    double re = 0.0, im = 0.0;
    if (e.is_number() && real) {
      re = e.get<double>();
    } else if (e.is_array() && (e.size() == 2 || (real && e.size() == 1))) {
      re = get_double(e[0], index_path(epath, 0));
      if (e.size() == 2) im = get_double(e[1], index_path(epath, 1));
    } else {
      throw SchemaError(epath, real ? "expected [re, im], [re] or a number"
                                    : "expected [re, im]");
    }
    if (real && im != 0.0) {
      throw SchemaError(epath, "nonzero imaginary part in a field \"R\" matrix");
    }
    values(static_cast<Eigen::Index>(i) / cols,
           static_cast<Eigen::Index>(i) % cols) = Complex(re, im);
  }
  return Matrix(real ? Field::Real : Field::Complex, std::move(values));
}

Json save_antiautomorphism(const AntiAutomorphism& phi) {
  return Json{{"u", save_matrix(phi.u())}};
}

CMat load_antiautomorphism_matrix(const Json& j, const std::string& path) {
  require_object(j, path, {"u"});
  return load_matrix(j["u"], key_path(path, "u")).values();
}

AntiAutomorphism load_antiautomorphism(const Json& j, const std::string& path) {
  CMat u = load_antiautomorphism_matrix(j, path);
  return at_path(key_path(path, "u"),
                 [&] { return AntiAutomorphism(std::move(u)); });
}

Json save_star_algebra(const StarAlgebra& a) {
  Json j{{"n", a.n()}, {"span", save_matrix_list(a.span())},
         {"unital", a.unital()}};
  if (!a.blocks().empty()) j["blocks"] = a.blocks();
  return j;
}

StarAlgebra load_star_algebra(const Json& j, const std::string& path) {
  require_object(j, path, {"n", "span", "unital"}, {"blocks"});
  const auto n = get_int(j["n"], key_path(path, "n"), 1, 1 << 12);
  const std::string spath = key_path(path, "span");
  std::vector<CMat> span = load_matrix_list(j["span"], spath);
  for (std::size_t i = 0; i < span.size(); ++i) {
    if (span[i].rows() != n || span[i].cols() != n) {
      throw SchemaError(index_path(spath, i),
                        "expected a " + std::to_string(n) + "x" +
                            std::to_string(n) + " matrix");
    }
  }
  const bool unital = get_bool(j["unital"], key_path(path, "unital"));
  StarAlgebra given =
      at_path(path, [&] { return StarAlgebra(n, span, unital); });

  std::vector<Eigen::Index> sizes;
  if (j.contains("blocks")) {
    const std::string bpath = key_path(path, "blocks");
    const Json& arr = get_array(j["blocks"], bpath);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      sizes.push_back(get_int(arr[i], index_path(bpath, i), 1, n));
    }
  } else {
    sizes = infer_blocks(given);
    if (sizes.empty() || !unital) return given;
  }
  StarAlgebra blocked =
      at_path(key_path(path, "blocks"), [&] { return StarAlgebra::block_diagonal(sizes); });
  if (blocked.n() != n || blocked.dim() != given.dim() ||
      !std::all_of(span.begin(), span.end(),
                   [&](const CMat& x) { return blocked.contains(x); })) {
    throw SchemaError(key_path(path, "blocks"),
                      "block sizes do not describe the spanned algebra");
  }
  if (unital != blocked.unital()) return given;
  return blocked;
}

Json save_linear_map(const LinearMap& phi) {
  return Json{{"dom", phi.dom_dim()},
              {"cod", phi.cod_dim()},
              {"linearity", to_string(phi.linearity())},
              {"images", save_matrix_list(phi.images())}};
}

LinearMap load_linear_map(const Json& j, const std::string& path) {
  require_object(j, path, {"dom", "cod", "linearity", "images"});
  const auto dom = get_int(j["dom"], key_path(path, "dom"), 1, 1 << 12);
  const auto cod = get_int(j["cod"], key_path(path, "cod"), 1, 1 << 12);
  const std::string lin = get_string(j["linearity"], key_path(path, "linearity"));
  if (lin != "C" && lin != "R") {
    throw SchemaError(key_path(path, "linearity"),
                      "linearity must be \"C\" or \"R\", got \"" + lin + "\"");
  }
  const Linearity linearity = lin == "C" ? Linearity::Complex : Linearity::Real;
  const std::string ipath = key_path(path, "images");
  std::vector<CMat> images = load_matrix_list(j["images"], ipath);
  return at_path(ipath, [&] {
    return LinearMap(dom, cod, linearity, std::move(images));
  });
}

Json save_certificate(const QDCertificate& cert) {
  Json j{{"algebra", save_star_algebra(cert.algebra)},
         {"phi_map", save_linear_map(cert.map)},
         {"F", save_matrix_list(cert.F.elements)},
         {"epsilon", cert.epsilon},
         {"norm_mode", to_string(cert.norm_mode)}};
  if (cert.real_form) j["phi"] = save_antiautomorphism(*cert.real_form);
  return j;
}

QDCertificate load_certificate(const Json& j, const std::string& path) {
  require_object(j, path, {"algebra", "phi_map", "F", "epsilon", "norm_mode"},
                 {"phi"});
  StarAlgebra algebra = load_star_algebra(j["algebra"], key_path(path, "algebra"));
  std::optional<AntiAutomorphism> phi;
  if (j.contains("phi")) phi = load_antiautomorphism(j["phi"], key_path(path, "phi"));
  const std::string fpath = key_path(path, "F");
  std::vector<CMat> elems = load_matrix_list(j["F"], fpath);
  FiniteSubset F = at_path(fpath, [&] { return FiniteSubset(std::move(elems)); });
  LinearMap map = load_linear_map(j["phi_map"], key_path(path, "phi_map"));
  const double eps = get_double(j["epsilon"], key_path(path, "epsilon"));
  const NormMode mode = load_norm_mode(j["norm_mode"], key_path(path, "norm_mode"));
  QDCertificate cert{std::move(algebra), std::move(phi), std::move(F),
                     std::move(map), eps, mode};
  at_path(path, [&] {
    cert.validate();
    return 0;
  });
  return cert;
}

Json save_ideal(const IdealPresentation& ideal) {
  return Json{{"B", save_star_algebra(ideal.algebra())},
              {"ideal_blocks", ideal.ideal_blocks()}};
}

IdealPresentation load_ideal(const Json& j, const std::string& path) {
  require_object(j, path, {"B", "ideal_blocks"});
  StarAlgebra b = load_star_algebra(j["B"], key_path(path, "B"));
  const std::string ipath = key_path(path, "ideal_blocks");
  const Json& arr = get_array(j["ideal_blocks"], ipath);
  std::vector<std::size_t> blocks;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    blocks.push_back(static_cast<std::size_t>(
        get_int(arr[i], index_path(ipath, i), 0, 1 << 20)));
  }
  return at_path(ipath, [&] {
    return IdealPresentation(std::move(b), std::move(blocks));
  });
}

Json save_trace_weight(const CMat& weight) {
  return Json{{"weight", save_matrix(weight)}};
}

CMat load_trace_weight(const Json& j, const std::string& path) {
  require_object(j, path, {"weight"});
  return load_matrix(j["weight"], key_path(path, "weight")).values();
}

NuclearWitnessDoc load_nuclear_witness(const Json& j, const std::string& path) {
  require_object(j, path, {"phi", "psi", "F", "epsilon"},
                 {"target", "norm_mode"});
  LinearMap phi = load_linear_map(j["phi"], key_path(path, "phi"));
  LinearMap psi = load_linear_map(j["psi"], key_path(path, "psi"));
  const std::string fpath = key_path(path, "F");
  std::vector<CMat> elems = load_matrix_list(j["F"], fpath);
  FiniteSubset F = at_path(fpath, [&] { return FiniteSubset(std::move(elems)); });
  NuclearWitnessDoc doc{std::move(phi), std::move(psi), std::move(F),
                        get_double(j["epsilon"], key_path(path, "epsilon")),
                        std::nullopt, NormMode::ComplexOp};
  if (j.contains("target")) {
    doc.target = load_linear_map(j["target"], key_path(path, "target"));
  }
  if (j.contains("norm_mode")) {
    doc.norm_mode = load_norm_mode(j["norm_mode"], key_path(path, "norm_mode"));
  }
  return doc;
}

FubiniDoc load_fubini(const Json& j, const std::string& path) {
  require_object(j, path, {"A", "phi", "B", "A1", "B1"}, {"psi_field"});
  FubiniDoc doc{load_star_algebra(j["A"], key_path(path, "A")),
                load_antiautomorphism(j["phi"], key_path(path, "phi")),
                load_star_algebra(j["B"], key_path(path, "B")),
                load_matrix_list(j["A1"], key_path(path, "A1")),
                load_matrix_list(j["B1"], key_path(path, "B1")),
                std::nullopt};
  if (j.contains("psi_field")) {
    const std::string p = key_path(path, "psi_field");
    const std::string f = get_string(j["psi_field"], p);
    if (f == "R") {
      doc.psi_field = ScalarField::Real;
    } else if (f == "C") {
      doc.psi_field = ScalarField::Complex;
    } else {
      throw SchemaError(p, "psi_field must be \"R\" or \"C\"");
    }
  }
  return doc;
}

Json save_report(const DefectReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json e{{"kind", w.kind}, {"first", w.first}, {"value", w.value}};
    if (w.second) e["second"] = *w.second;
    witnesses.push_back(e);
  }
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(
        {{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}});
  }
  Json j{{"epsilon", r.epsilon},
         {"max_mult_defect", r.max_mult_defect},
         {"max_norm_defect", r.max_norm_defect},
         {"witnesses", witnesses},
         {"checks", checks},
         {"flags", r.flags},
         {"pass", r.pass}};
  if (r.max_trace_defect) j["max_trace_defect"] = *r.max_trace_defect;
  if (r.max_factorization_defect) {
    j["max_factorization_defect"] = *r.max_factorization_defect;
  }
  return j;
}

Json save_report(const AuditReport& r) {
  Json witness = Json::object();
  for (const auto& [k, m] : r.witness) witness[k] = save_matrix(m);
  Json values = Json::object();
  for (const auto& [k, v] : r.values) values[k] = v;
  return Json{{"claim", r.claim},
              {"verdict", r.holds ? "holds" : "counterexample"},
              {"holds", r.holds},
              {"max_residual", r.max_residual},
              {"values", values},
              {"witness", witness},
              {"detail", r.detail},
              {"provenance",
               {{"seed", r.seed}, {"samples", r.samples}, {"version", version()}}}};
}

Json save_report(const RealCpReport& r) {
  return Json{{"level", r.level},
              {"defect", r.defect},
              {"self_adjoint_defect", r.self_adjoint_defect},
              {"witness", save_matrix(r.witness)},
              {"witness_image", save_matrix(r.witness_image)},
              {"evaluated", r.evaluated}};
}

Json save_report(const AntiAutomorphismReport& r) {
  Json j{{"samples", r.samples},
         {"seed", r.seed},
         {"unitarity_defect", r.unitarity_defect},
         {"symmetry_defect", r.symmetry_defect},
         {"antimultiplicative", r.antimultiplicative},
         {"star_compatibility", r.star_compatibility},
         {"involution", r.involution},
         {"pass", r.pass}};
  if (r.error) j["error"] = *r.error;
  return j;
}

Json save_comparison(const SubspaceComparison& c) {
  return Json{{"dims", {c.dim_a, c.dim_b}},
              {"principal_angle", c.max_principal_angle},
              {"verdict", c.equal ? "equal" : "different"}};
}

Json save_comparison(const KernelComparison& c) {
  return Json{{"dims", {c.kernel_dim, c.expected_dim}},
              {"principal_angle", c.max_principal_angle},
              {"verdict", c.equal ? "equal" : "different"}};
}

Json save_report(const ExactnessReport& r) {
  const KernelComparison* all[] = {&r.real, &r.complex, &r.fubini,
                                   &r.decomposition};
  double angle = 0.0;
  for (const auto* c : all) angle = std::max(angle, c->max_principal_angle);
  return Json{{"dims", {r.real.kernel_dim, r.real.expected_dim}},
              {"principal_angle", angle},
              {"verdict", r.exact() ? "exact" : "not_exact"},
              {"real", save_comparison(r.real)},
              {"complex", save_comparison(r.complex)},
              {"fubini", save_comparison(r.fubini)},
              {"decomposition", save_comparison(r.decomposition)},
              {"ideal_residual", r.ideal_residual}};
}

Json save_report(const FubiniResult& r) {
  Json j = save_comparison(r.comparison);
  j["psi_field"] = r.psi_field == ScalarField::Real ? "R" : "C";
  return j;
}

}  // namespace starlift::io
