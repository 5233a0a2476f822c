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

#include "oracle.hpp"
#include "starlift/real_form.hpp"

using namespace starlift;

namespace {

constexpr Complex kI(0.0, 1.0);

CMat symplectic() {
  CMat u(2, 2);
  u << 0.0, 1.0, -1.0, 0.0;
  return u;
}

// Phi(x) = u x^T u*, evaluated entry by entry.
CMat phi_oracle(const CMat& u, const CMat& x) {
  const Eigen::Index n = x.rows();
  CMat out = CMat::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      for (Eigen::Index c = 0; c < n; ++c)
        for (Eigen::Index d = 0; d < n; ++d)
          out(a, b) += u(a, c) * x(d, c) * std::conj(u(b, d));
  return out;
}

std::vector<AntiAutomorphism> sample_forms() {
  std::vector<AntiAutomorphism> out{AntiAutomorphism::transpose(2),
                                    AntiAutomorphism::transpose(3),
                                    AntiAutomorphism(symplectic())};
  CMat d = CMat::Identity(2, 2);
  d(1, 1) = -1.0;
  out.emplace_back(d);
  // Symmetric unitary from an orthogonal-free construction: v v^T, v unitary.
  oracle::Sampler s(31);
  const CMat v = s.unitary(3);
  out.emplace_back(v * v.transpose());
  return out;
}

}  // namespace

TEST_CASE("AntiAutomorphism validates u", "[real_form]") {
  CHECK(AntiAutomorphism::transpose(3).is_transpose());
  CHECK(AntiAutomorphism(symplectic()).symmetry() == -1);
  CHECK(AntiAutomorphism::transpose(2).symmetry() == 1);
  CMat nonunitary = CMat::Identity(2, 2) * 2.0;
  CHECK_THROWS_AS(AntiAutomorphism(nonunitary), InputError);
  oracle::Sampler s(32);
  CHECK_THROWS_AS(AntiAutomorphism(s.unitary(3)), InputError);  // not (anti)symmetric
  CHECK_THROWS_AS(AntiAutomorphism(CMat::Zero(2, 3)), InputError);
}

TEST_CASE("apply_phi examples", "[real_form]") {
  const auto t = AntiAutomorphism::transpose(2);
  CMat x(2, 2);
  x << 1.0, 2.0, 3.0, 4.0;
  CMat xt(2, 2);
  xt << 1.0, 3.0, 2.0, 4.0;
  CHECK(apply_phi(t, x) == xt);
  CHECK(apply_phi(t, CMat::Identity(2, 2)) == CMat::Identity(2, 2));
  const AntiAutomorphism j(symplectic());
  const CMat e22 = apply_phi(j, oracle::unit(2, 0, 0));
  CHECK(max_abs_diff(e22, phi_oracle(symplectic(), oracle::unit(2, 0, 0))) <= 1e-15);
  CHECK(max_abs_diff(e22, oracle::unit(2, 1, 1)) <= 1e-15);
  CHECK_THROWS_AS(apply_phi(t, CMat::Zero(3, 3)), InputError);
}

TEST_CASE("apply_phi matches the entrywise oracle", "[real_form][property]") {
  oracle::Sampler s(33);
  for (const auto& phi : sample_forms()) {
    for (int t = 0; t < 20; ++t) {
      const CMat x = s.cmat(phi.dim(), phi.dim());
      REQUIRE(max_abs_diff(apply_phi(phi, x), phi_oracle(phi.u(), x)) <= 1e-12);
    }
  }
}

TEST_CASE("real_decompose examples", "[real_form]") {
  const auto t = AntiAutomorphism::transpose(2);
  CMat x(2, 2);
  x << 1.0, kI, 0.0, 1.0;
  const auto [r, s] = real_decompose(t, x);
  // For the transpose the parts are the entrywise real and imaginary parts.
  CHECK(max_abs_diff(r, x.real().cast<Complex>()) <= 1e-15);
  CHECK(max_abs_diff(s, x.imag().cast<Complex>()) <= 1e-15);
  CHECK(max_abs_diff(r, CMat::Identity(2, 2)) <= 1e-15);
  CHECK(max_abs_diff(s, oracle::unit(2, 0, 1)) <= 1e-15);

  CMat a(2, 2);
  a << 1.0, -2.0, 0.5, 3.0;
  const auto fixed = real_decompose(t, a);
  CHECK(max_abs_diff(fixed.r, a) <= 1e-15);
  CHECK(fixed.s.norm() <= 1e-15);
  const auto imag = real_decompose(t, kI * a);
  CHECK(imag.r.norm() <= 1e-15);
  CHECK(max_abs_diff(imag.s, a) <= 1e-15);
}

TEST_CASE("real_decompose invariants", "[real_form][property]") {
  oracle::Sampler s(34);
  for (const auto& phi : sample_forms()) {
    for (int t = 0; t < 30; ++t) {
      const CMat x = s.cmat(phi.dim(), phi.dim());
      const auto [r, sp] = real_decompose(phi, x);
      REQUIRE(max_abs_diff(r + kI * sp, x) <= 1e-12);
      REQUIRE(real_form_residual(phi, r) <= 1e-10);
      REQUIRE(real_form_residual(phi, sp) <= 1e-10);
      REQUIRE(in_real_form(phi, r));
      // Uniqueness: decomposing a real-form element returns (x, 0).
      const auto again = real_decompose(phi, r);
      REQUIRE(max_abs_diff(again.r, r) <= 1e-12);
      REQUIRE(again.s.norm() <= 1e-12);
    }
  }
}

TEST_CASE("A_Phi and i A_Phi meet only in zero", "[real_form]") {
  for (const auto& phi : sample_forms()) {
    const RealSubspace a = real_form_space(phi);
    std::vector<CMat> imag;
    for (const auto& e : a.elements()) imag.push_back(kI * e);
    CHECK(a.intersect(RealSubspace::real_span(imag)).dim() == 0);
    CHECK(a.dim() == phi.dim() * phi.dim());
  }
}

TEST_CASE("conj_phi examples and properties", "[real_form]") {
  oracle::Sampler s(35);
  const auto t = AntiAutomorphism::transpose(3);
  const CMat x = s.cmat(3, 3);
  CHECK(max_abs_diff(conj_phi(t, x), x.conjugate()) <= 1e-15);
  for (const auto& phi : sample_forms()) {
    const Eigen::Index n = phi.dim();
    for (int k = 0; k < 20; ++k) {
      const CMat a = s.cmat(n, n), b = s.cmat(n, n);
      const Complex lambda = s.cnormal();
      REQUIRE(max_abs_diff(conj_phi(phi, conj_phi(phi, a)), a) <= 1e-12);
      REQUIRE(max_abs_diff(conj_phi(phi, a * b), conj_phi(phi, a) * conj_phi(phi, b)) <= 1e-11);
      REQUIRE(max_abs_diff(conj_phi(phi, lambda * a), std::conj(lambda) * conj_phi(phi, a)) <= 1e-11);
      const auto [r, sp] = real_decompose(phi, a);
      REQUIRE(max_abs_diff(conj_phi(phi, a), r - kI * sp) <= 1e-12);
      REQUIRE(max_abs_diff(conj_phi(phi, r), r) <= 1e-12);
    }
  }
}

TEST_CASE("check_antiautomorphism examples", "[real_form]") {
  const auto t = check_antiautomorphism(CMat::Identity(2, 2), 50, 1);
  CHECK(t.pass);
  CHECK(t.antimultiplicative < 1e-12);
  CHECK(t.star_compatibility < 1e-12);
  CHECK(t.involution < 1e-12);
  CHECK(t.samples == 50);

  const auto bad = check_antiautomorphism(CMat::Identity(2, 2) * 2.0, 10, 1);
  CHECK_FALSE(bad.pass);
  CHECK(bad.error.has_value());

  CMat d = CMat::Identity(2, 2);
  d(1, 1) = -1.0;
  CHECK(check_antiautomorphism(d, 50, 2).pass);
  CHECK(check_antiautomorphism(symplectic(), 50, 3).pass);
}

TEST_CASE("RealFormElement checks membership", "[real_form]") {
  const auto t = AntiAutomorphism::transpose(2);
  CHECK_NOTHROW(RealFormElement(t, CMat::Identity(2, 2)));
  CHECK_THROWS_AS(RealFormElement(t, kI * CMat::Identity(2, 2)), InputError);
}

TEST_CASE("real_form_basis", "[real_form]") {
  const auto units = real_form_basis(AntiAutomorphism::transpose(2));
  REQUIRE(units.size() == 4);
  CHECK(units[1] == oracle::unit(2, 0, 1));
  const AntiAutomorphism j(symplectic());
  const auto quat = real_form_basis(j);
  CHECK(quat.size() == 4);
  for (const auto& q : quat) CHECK(in_real_form(j, q));
  // The real form of the symplectic involution is the quaternions: closed
  // under products.
  const RealSubspace h = RealSubspace::real_span(quat);
  for (const auto& a : quat)
    for (const auto& b : quat) CHECK(h.contains(a * b));
}

TEST_CASE("amplify and tensor_transpose", "[real_form]") {
  const AntiAutomorphism j(symplectic());
  const auto j2 = j.amplify(2);
  CHECK(j2.dim() == 4);
  oracle::Sampler s(36);
  const CMat a = s.cmat(2, 2), b = s.cmat(2, 2);
  // Real form of the amplification contains M_2(A_Phi) block matrices.
  const auto [ra, sa] = real_decompose(j, a);
  CMat block = CMat::Zero(4, 4);
  block.block(0, 0, 2, 2) = ra;
  block.block(2, 2, 2, 2) = sa;
  CHECK(in_real_form(j2, block));
  const auto jt = j.tensor_transpose(3);
  const auto jt2 = j.tensor_transpose(2);
  CHECK(max_abs_diff(jt2.apply(oracle::kron(a, b)),
                     oracle::kron(j.apply(a), b.transpose())) <= 1e-12);
  const CMat c = s.cmat(3, 3);
  CHECK(max_abs_diff(jt.apply(oracle::kron(a, c)),
                     oracle::kron(j.apply(a), c.transpose())) <= 1e-12);
}

TEST_CASE("StarAlgebra construction and validation", "[real_form][algebra]") {
  CHECK(StarAlgebra::full(2).dim() == 4);
  CHECK(StarAlgebra::diagonal(3).dim() == 3);
  const auto b = StarAlgebra::block_diagonal({2, 3});
  CHECK(b.dim() == 13);
  CHECK(b.n() == 5);
  CHECK(b.blocks() == std::vector<Eigen::Index>{2, 3});
  CHECK(b.contains(CMat::Identity(5, 5)));
  CHECK_FALSE(b.contains(oracle::unit(5, 0, 4)));
  // Not closed under products.
  CHECK_THROWS_AS(StarAlgebra(2, {oracle::unit(2, 0, 1), oracle::unit(2, 1, 0)}, false),
                  InputError);
  // Not closed under adjoints.
  CHECK_THROWS_AS(StarAlgebra(2, {CMat::Identity(2, 2), oracle::unit(2, 0, 1)}, true),
                  InputError);
  // Unital flag without the identity.
  CHECK_THROWS_AS(StarAlgebra(2, {oracle::unit(2, 0, 0)}, true), InputError);
  CHECK_NOTHROW(StarAlgebra(2, {oracle::unit(2, 0, 0)}, false));
}

TEST_CASE("StarAlgebra real form", "[real_form][algebra]") {
  const auto b = StarAlgebra::block_diagonal({2, 3});
  const auto rf = b.real_form(AntiAutomorphism::transpose(5));
  CHECK(rf.dim() == 13);
  const AntiAutomorphism j(symplectic());
  CMat u = CMat::Zero(4, 4);
  u.block(0, 0, 2, 2) = symplectic();
  u.block(2, 2, 2, 2) = symplectic();
  // Block-diagonal u preserves the block algebra; an off-diagonal swap of a
  // 1+3 structure does not.
  CHECK(StarAlgebra::block_diagonal({2, 2}).real_form(AntiAutomorphism(u)).dim() == 8);
  CMat swap = CMat::Zero(4, 4);
  swap(0, 3) = swap(3, 0) = swap(1, 2) = swap(2, 1) = 1.0;
  CHECK_THROWS_AS(StarAlgebra::block_diagonal({1, 3}).real_form(AntiAutomorphism(swap)),
                  InputError);
}
