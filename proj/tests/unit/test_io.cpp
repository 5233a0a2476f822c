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


#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "oracle.hpp"
#include "starlift/io.hpp"

using namespace starlift;
using io::Json;

namespace {

std::string data_path(const std::string& name) {
  return std::string(STARLIFT_TEST_DATA_DIR) + "/" + name;
}

template <class F>
std::string schema_where(F&& f) {
  try {
    f();
  } catch (const io::SchemaError& e) {
    return e.where();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("canonical_dump formatting", "[io]") {
  Json j = {{"b", 1.5}, {"a", Json::array({1, 2})}, {"z", -0.0}};
  CHECK(io::canonical_dump(j) == "{\n  \"a\": [1, 2],\n  \"b\": 1.5,\n  \"z\": 0\n}\n");
  CHECK(io::canonical_dump(Json(0.1)) == "0.10000000000000001\n");
  CHECK(io::canonical_dump(Json(std::nan(""))) == "null\n");
  CHECK(io::canonical_dump(Json::array()) == "[]\n");
}

TEST_CASE("matrix documents", "[io][matrix]") {
  const Json doc = io::parse(R"({"rows": 2, "cols": 2, "field": "C",
      "data": [[1, 0], [0, 2], [3, 0], [4, -1]]})");
  const Matrix m = io::load_matrix(doc);
  CHECK(m.field() == Field::Complex);
  CHECK(m.values()(0, 1) == Complex(0.0, 2.0));
  CHECK(m.values()(1, 0) == Complex(3.0, 0.0));
  CHECK(m.values()(1, 1) == Complex(4.0, -1.0));

  const Json real = io::parse(R"({"rows": 1, "cols": 3, "field": "R", "data": [1, [2], [3, 0]]})");
  CHECK(io::load_matrix(real).values() == (CMat(1, 3) << 1.0, 2.0, 3.0).finished());

  CHECK(schema_where([] {
          io::load_matrix(io::read_file(data_path("matrix_field_q.json")));
        }) == "$.field");
  CHECK(schema_where([] {
          io::load_matrix(io::parse(R"({"rows": 1, "cols": 1, "field": "R", "data": [[0, 1]]})"));
        }) == "$.data[0]");
  CHECK(schema_where([] {
          io::load_matrix(io::parse(R"({"rows": 1, "cols": 2, "field": "R", "data": [1]})"));
        }) == "$.data");
  CHECK(schema_where([] {
          io::load_matrix(io::parse(R"({"rows": 1, "cols": 1, "field": "R", "data": [1], "x": 0})"));
        }) == "$.x");
  CHECK(schema_where([] {
          io::load_matrix(io::parse(R"({"cols": 1, "field": "R", "data": [1]})"));
        }) == "$.rows");
}

TEST_CASE("matrix round trip is byte-identical", "[io][matrix][property]") {
  oracle::Sampler s(81);
  for (int t = 0; t < 50; ++t) {
    const int r = s.integer(1, 4), c = s.integer(1, 4);
    const CMat m = (t % 2 == 0) ? s.cmat(r, c) : CMat(s.rmat(r, c).cast<Complex>());
    const std::string first = io::canonical_dump(io::save_matrix(m));
    const Matrix back = io::load_matrix(io::parse(first));
    REQUIRE(back.values() == m);
    REQUIRE(io::canonical_dump(io::save_matrix(back)) == first);
    REQUIRE(back.field() == (t % 2 == 0 ? Field::Complex : Field::Real));
  }
}

TEST_CASE("parse errors carry line and column", "[io]") {
  try {
    io::parse("{\n  \"a\": [1,\n  }\n", "doc.json");
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("doc.json:3:") != std::string::npos);
  }
  CHECK_THROWS_AS(io::read_file(data_path("does_not_exist.json")), InputError);
}

TEST_CASE("antiautomorphism and algebra documents", "[io][schema]") {
  oracle::Sampler s(82);
  const CMat v = s.unitary(3);
  const AntiAutomorphism phi(v * v.transpose());
  const AntiAutomorphism back = io::load_antiautomorphism(io::save_antiautomorphism(phi));
  CHECK(max_abs_diff(back.u(), phi.u()) == 0.0);
  CHECK(schema_where([] { io::load_antiautomorphism(Json::object()); }) == "$.u");

  const auto b = StarAlgebra::block_diagonal({2, 3});
  const Json doc = io::save_star_algebra(b);
  const StarAlgebra b2 = io::load_star_algebra(doc);
  CHECK(b2.dim() == b.dim());
  CHECK(b2.blocks() == b.blocks());
  Json no_blocks = doc;
  no_blocks.erase("blocks");
  CHECK(io::load_star_algebra(no_blocks).blocks() == b.blocks());
  CHECK(io::canonical_dump(io::save_star_algebra(b2)) == io::canonical_dump(doc));
}

TEST_CASE("linear map documents", "[io][schema]") {
  oracle::Sampler s(83);
  const LinearMap phi = LinearMap::conjugation(s.cmat(3, 2));
  const LinearMap back = io::load_linear_map(io::save_linear_map(phi));
  CHECK(back.max_difference(phi) == 0.0);
  const LinearMap r = LinearMap::transpose(2);
  CHECK(io::load_linear_map(io::save_linear_map(r)).linearity() == r.linearity());
  Json bad = io::save_linear_map(phi);
  bad["linearity"] = "Q";
  CHECK(schema_where([&] { io::load_linear_map(bad); }) == "$.linearity");
  Json short_images = io::save_linear_map(phi);
  short_images["images"].erase(0);
  CHECK_THROWS_AS(io::load_linear_map(short_images), io::SchemaError);
}

TEST_CASE("certificate documents", "[io][schema]") {
  const QDCertificate c = io::load_certificate(io::read_file(data_path("id_cert.json")));
  CHECK(c.epsilon == 0.1);
  CHECK(c.F.size() == 3);
  CHECK(c.norm_mode == NormMode::ComplexOp);
  const Json again = io::save_certificate(c);
  CHECK(io::canonical_dump(io::save_certificate(io::load_certificate(again))) ==
        io::canonical_dump(again));

  try {
    io::load_certificate(io::read_file(data_path("cert_missing_epsilon.json")));
    FAIL("expected a schema error");
  } catch (const io::SchemaError& e) {
    CHECK(e.where() == "$.epsilon");
    CHECK(std::string(e.what()).find("epsilon") != std::string::npos);
  }
  Json neg = again;
  neg["epsilon"] = -1.0;
  CHECK_THROWS_AS(io::load_certificate(neg), InputError);
  Json mode = again;
  mode["norm_mode"] = "nuclear";
  CHECK(schema_where([&] { io::load_certificate(mode); }) == "$.norm_mode");
}

TEST_CASE("ideal, trace, witness and fubini documents", "[io][schema]") {
  const IdealPresentation ideal = io::load_ideal(io::read_file(data_path("ideal_m2_m3.json")));
  CHECK(ideal.ideal_blocks() == std::vector<std::size_t>{0});
  CHECK(io::canonical_dump(io::save_ideal(io::load_ideal(io::save_ideal(ideal)))) ==
        io::canonical_dump(io::save_ideal(ideal)));

  const CMat w = io::load_trace_weight(io::read_file(data_path("trace_m2.json")));
  CHECK(max_abs_diff(w, CMat::Identity(2, 2) / 2.0) == 0.0);
  CHECK(max_abs_diff(io::load_trace_weight(io::save_trace_weight(w)), w) == 0.0);

  const auto nw = io::load_nuclear_witness(io::read_file(data_path("nuclear_identity2.json")));
  CHECK(nw.phi.dom_dim() == 2);
  CHECK(nw.epsilon > 0.0);

  const auto fd = io::load_fubini(io::read_file(data_path("fubini_m2_ideal.json")));
  CHECK(fd.a.n() == 2);
  CHECK(fd.b.n() == 5);
  CHECK(fd.a1.size() == 4);
  CHECK(fd.psi_field == ScalarField::Real);
}

TEST_CASE("report documents", "[io][report]") {
  AuditOptions o;
  o.samples = 10;
  o.seed = 5;
  const Json r = io::save_report(lemma_audit(LemmaClaim::Eqtr1Scale1, o));
  CHECK(r.at("verdict") == "counterexample");
  CHECK(r.at("provenance").at("seed") == 5);
  CHECK(r.at("provenance").at("samples") == 10);
  CHECK(r.at("provenance").at("version") == io::version());

  const auto cmp = compare_subspaces(RealSubspace::real_span({oracle::unit(2, 0, 0)}),
                                    RealSubspace::real_span({oracle::unit(2, 0, 0)}));
  const Json c = io::save_comparison(cmp);
  CHECK(c.at("verdict") == "equal");
  CHECK(c.at("dims") == Json::array({1, 1}));

  DefectReport d;
  d.epsilon = 0.5;
  d.max_mult_defect = 0.25;
  d.finalize();
  const Json dj = io::save_report(d);
  CHECK(dj.at("pass") == true);
  CHECK(dj.at("max_mult_defect") == 0.25);
}

TEST_CASE("write_file round trip", "[io]") {
  const auto path = std::filesystem::temp_directory_path() / "starlift_io_test.json";
  const Json j = io::save_matrix(CMat::Identity(2, 2));
  io::write_file(path.string(), j);
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == io::canonical_dump(j));
  CHECK(io::read_file(path.string()) == j);
  std::filesystem::remove(path);
}
