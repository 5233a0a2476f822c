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
#include "starlift/linear_map.hpp"
#include "starlift/transport.hpp"

using namespace starlift;
using Catch::Approx;

namespace {

constexpr Complex kI(0.0, 1.0);

// Choi matrix built directly from the definition.
CMat choi_oracle(const LinearMap& phi) {
  const Eigen::Index n = phi.dom_dim(), m = phi.cod_dim();
  CMat out = CMat::Zero(n * m, n * m);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index l = 0; l < n; ++l)
      out += oracle::kron(oracle::unit(n, j, l), phi.apply(oracle::unit(n, j, l)));
  return out;
}

double min_eigenvalue(const CMat& h) {
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (h + h.adjoint()));
  return es.eigenvalues().minCoeff();
}

LinearMap real_kraus(const std::vector<RMat>& vs) {
  const Eigen::Index n = vs.front().rows();
  const Eigen::Index m = vs.front().cols();
  return LinearMap::from_function(n, m, Linearity::Real, [vs, m](const CMat& x) {
    CMat out = CMat::Zero(m, m);
    for (const auto& v : vs) out += v.transpose().cast<Complex>() * x * v.cast<Complex>();
    return out;
  });
}

}  // namespace

TEST_CASE("LinearMap basis and validation", "[linear_map]") {
  CHECK(LinearMap::basis_size(3, Linearity::Complex) == 9);
  CHECK(LinearMap::basis_size(3, Linearity::Real) == 18);
  CHECK(LinearMap::basis_element(2, Linearity::Complex, 1) == oracle::unit(2, 0, 1));
  CHECK(LinearMap::basis_element(2, Linearity::Real, 5) == kI * oracle::unit(2, 0, 1));
  CHECK_THROWS_AS(LinearMap(2, 2, Linearity::Complex, {CMat::Zero(2, 2)}), InputError);
  CHECK_THROWS_AS(LinearMap(1, 2, Linearity::Complex, {CMat::Zero(3, 3)}), InputError);
  CHECK(std::string(to_string(Linearity::Complex)) == "C");
  CHECK(std::string(to_string(Linearity::Real)) == "R");
}

TEST_CASE("apply on real-linear maps separates real and imaginary parts",
          "[linear_map]") {
  // phi(x) = Re(x) entrywise, real-linear but not complex-linear.
  const auto re = LinearMap::from_function(2, 2, Linearity::Real, [](const CMat& x) {
    return CMat(x.real().cast<Complex>());
  });
  oracle::Sampler s(41);
  const CMat x = s.cmat(2, 2);
  CHECK(max_abs_diff(re.apply(x), x.real().cast<Complex>()) <= 1e-14);
  // Re(i E_jl) = 0, so every stored image is real.
  CHECK(re.cod_field() == Field::Real);
  CHECK_THROWS_AS(re.apply(CMat::Zero(3, 3)), InputError);
}

TEST_CASE("choi examples", "[linear_map][choi]") {
  const auto id = choi(LinearMap::identity(2)).value;
  CHECK(min_eigenvalue(id) == Approx(0.0).margin(1e-14));
  CHECK(id.trace().real() == Approx(2.0));
  // Rank one: it is |w><w| with w = sum e_j (x) e_j.
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(4);
  w(0) = w(3) = 1.0;
  CHECK(max_abs_diff(id, w * w.adjoint()) <= 1e-15);

  const auto t = choi(LinearMap::transpose(2)).value;
  CMat swap = CMat::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  CHECK(max_abs_diff(t, swap) <= 1e-15);
  Eigen::SelfAdjointEigenSolver<CMat> es(t);
  CHECK(es.eigenvalues()(0) == Approx(-1.0));
  CHECK(es.eigenvalues()(1) == Approx(1.0));
  CHECK(es.eigenvalues()(3) == Approx(1.0));

  CHECK(choi(LinearMap::zero(2, 3, Linearity::Complex)).value.norm() == 0.0);
  CHECK_THROWS_AS(choi(LinearMap::zero(2, 2, Linearity::Real)), InputError);
}

TEST_CASE("cp_defect examples", "[linear_map][choi]") {
  CHECK(cp_defect(LinearMap::identity(3)) == Approx(0.0).margin(1e-14));
  CHECK(cp_defect(LinearMap::transpose(2)) == Approx(-1.0).margin(1e-12));
  oracle::Sampler s(42);
  for (int t = 0; t < 20; ++t) {
    const CMat v = s.cmat(3, 2);
    const auto c = LinearMap::conjugation(v);
    CHECK(cp_defect(c) >= -1e-12);
    CHECK(cp_defect(c) == Approx(min_eigenvalue(choi_oracle(c))).margin(1e-10));
  }
}

TEST_CASE("choi is linear and cp_defect is positively homogeneous",
          "[linear_map][choi][property]") {
  oracle::Sampler s(43);
  for (int t = 0; t < 20; ++t) {
    const auto a = LinearMap::conjugation(s.cmat(2, 2));
    const auto b = LinearMap::transpose(2).scaled(s.uniform(0.1, 2.0));
    const double lambda = s.uniform(0.1, 5.0);
    const auto sum = LinearMap::from_function(2, 2, Linearity::Complex,
                                              [&](const CMat& x) { return CMat(a(x) + b(x)); });
    REQUIRE(max_abs_diff(choi(sum).value, choi(a).value + choi(b).value) <= 1e-12);
    REQUIRE(max_abs_diff(choi(a).value, choi_oracle(a)) <= 1e-12);
    REQUIRE(cp_defect(sum.scaled(lambda)) ==
            Approx(lambda * cp_defect(sum)).margin(1e-10));
  }
}

TEST_CASE("cp_defect_real examples", "[linear_map][cp_real]") {
  RealCpOptions opts;
  opts.real_form = AntiAutomorphism::transpose(1);
  const auto sigma = sigma_map(1);
  const auto r3 = cp_defect_real(sigma, 3, opts);
  CHECK(r3.defect >= -1e-10);
  CHECK(r3.positive(1e-9));

  CMat p(2, 2);
  p << 1.0, kI, -kI, 1.0;
  RealCpOptions plain;
  plain.probes = {p};
  const auto eta = cp_defect_real(eta_map(1), 2, plain);
  CHECK(eta.defect == Approx(-1.0).margin(1e-10));
  CHECK(max_abs_diff(eta.witness, p) <= 1e-15);

  const auto zero = cp_defect_real(LinearMap::zero(2, 2, Linearity::Real), 2, RealCpOptions{});
  CHECK(zero.defect == Approx(0.0).margin(1e-15));
  CHECK(zero.positive(1e-9));
}

TEST_CASE("cp_defect_real is deterministic in the seed", "[linear_map][cp_real]") {
  RealCpOptions opts;
  opts.seed = 9;
  const auto phi = LinearMap::conjugation(oracle::Sampler(1).cmat(2, 2));
  const auto a = cp_defect_real(phi, 2, opts);
  const auto b = cp_defect_real(phi, 2, opts);
  CHECK(a.defect == b.defect);
  CHECK(a.witness == b.witness);
  CHECK(a.evaluated == b.evaluated);
}

TEST_CASE("CP agrees with complexified CP", "[linear_map][cp_real][property]") {
  oracle::Sampler s(44);
  for (int t = 0; t < 40; ++t) {
    const int n = s.integer(1, 3);
    const int m = s.integer(1, 3);
    std::vector<RMat> vs{s.rmat(n, m), s.rmat(n, m)};
    LinearMap phi = real_kraus(vs);
    const bool perturb = t % 2 == 1;
    if (perturb) {
      // Subtracting beta * tr(x) I shifts the Choi spectrum down by beta.
      const double beta =
          min_eigenvalue(choi_oracle(complexify(phi, AntiAutomorphism::transpose(n)))) +
          s.uniform(0.05, 1.0);
      const auto base = phi;
      phi = LinearMap::from_function(n, m, Linearity::Real, [=](const CMat& x) {
        return CMat(base(x) - beta * x.trace() * CMat::Identity(m, m));
      });
    }
    RealCpOptions opts;
    opts.real_form = AntiAutomorphism::transpose(n);
    opts.seed = static_cast<std::uint64_t>(t);
    const bool real_cp = cp_defect_real(phi, n, opts).positive(1e-8);
    const auto phic = complexify(phi, *opts.real_form);
    const bool complex_cp = min_eigenvalue(choi_oracle(phic)) >= -1e-8;
    REQUIRE(real_cp == complex_cp);
    REQUIRE(complex_cp == (cp_defect(phic, 1e-8) >= -1e-8));
    if (!perturb) REQUIRE(real_cp);
  }
}

TEST_CASE("complexify examples", "[linear_map][complexify]") {
  const auto t = AntiAutomorphism::transpose(2);
  const auto real_id = LinearMap::from_function(2, 2, Linearity::Real,
                                                [](const CMat& x) { return x; });
  CHECK(complexify(real_id, t).max_difference(LinearMap::identity(2)) <= 1e-14);

  // Trace on M_2(R), extended: defined as Re(tr) on all of M_2(C).
  const auto real_trace = LinearMap::from_function(2, 1, Linearity::Real, [](const CMat& x) {
    CMat out(1, 1);
    out(0, 0) = x.trace().real();
    return out;
  });
  const auto tr = complexify(real_trace, t);
  oracle::Sampler s(45);
  const CMat x = s.cmat(2, 2);
  CHECK(std::abs(tr(x)(0, 0) - x.trace()) <= 1e-14);

  const AntiAutomorphism j([] {
    CMat u(2, 2);
    u << 0.0, 1.0, -1.0, 0.0;
    return u;
  }());
  const auto arbitrary = LinearMap::from_function(2, 3, Linearity::Real, [&](const CMat& y) {
    CMat out = CMat::Zero(3, 3);
    out.topLeftCorner(2, 2) = y.real().cast<Complex>() * 2.0 + y.imag().cast<Complex>() * kI;
    return out;
  });
  const auto c = complexify(arbitrary, j);
  for (const auto& a : real_form_basis(j)) {
    CHECK(max_abs_diff(c(a), arbitrary(a)) <= 1e-12);
    CHECK(max_abs_diff(c(kI * a), kI * arbitrary(a)) <= 1e-12);
  }
  CHECK(c.linearity() == Linearity::Complex);
}

TEST_CASE("complexify from an explicit basis", "[linear_map][complexify]") {
  const auto t = AntiAutomorphism::transpose(2);
  std::vector<CMat> basis, images;
  for (int j = 0; j < 2; ++j)
    for (int l = 0; l < 2; ++l) {
      basis.push_back(oracle::unit(2, j, l) + oracle::unit(2, l, l));
      images.push_back(basis.back().transpose());
    }
  const auto c = complexify(t, basis, images);
  CHECK(c.max_difference(LinearMap::transpose(2)) <= 1e-12);
  std::vector<CMat> bad = basis;
  bad[0] = kI * bad[0];
  CHECK_THROWS_AS(complexify(t, bad, images), InputError);
  std::vector<CMat> short_basis(basis.begin(), basis.begin() + 3);
  std::vector<CMat> short_images(images.begin(), images.begin() + 3);
  CHECK_THROWS_AS(complexify(t, short_basis, short_images), InputError);
}

TEST_CASE("amplify, compress and compose examples", "[linear_map]") {
  oracle::Sampler s(46);
  const auto id = LinearMap::identity(2);
  CHECK(amplify(id, 3).max_difference(LinearMap::identity(6)) <= 1e-14);
  const auto sigma = sigma_map(2);
  CHECK(amplify(sigma, 1).max_difference(sigma) <= 1e-14);
  const auto phi = LinearMap::conjugation(s.cmat(2, 3));
  const CMat x = s.cmat(2, 2);
  const CMat amp = amplify(phi, 2)(oracle::kron(oracle::unit(2, 0, 0), x));
  CHECK(max_abs_diff(amp, oracle::kron(oracle::unit(2, 0, 0), phi(x))) <= 1e-12);
  CHECK(max_abs_diff(phi.apply_amplified(oracle::kron(oracle::unit(2, 0, 1), x), 2),
                     oracle::kron(oracle::unit(2, 0, 1), phi(x))) <= 1e-12);

  CHECK(compress(phi, CMat::Identity(3, 3)).max_difference(phi) <= 1e-14);
  CHECK(compress(phi, CMat::Zero(3, 2)).max_difference(LinearMap::zero(2, 2, Linearity::Complex)) <= 1e-14);
  CHECK_THROWS_AS(compress(phi, CMat::Zero(2, 2)), InputError);
  for (int t = 0; t < 10; ++t) {
    CHECK(cp_defect(compress(id, s.cmat(2, 3))) >= -1e-12);
  }

  CHECK(compose(LinearMap::identity(3), phi).max_difference(phi) <= 1e-14);
  CHECK(compose(phi, LinearMap::zero(2, 2, Linearity::Complex))
            .max_difference(LinearMap::zero(2, 3, Linearity::Complex)) <= 1e-14);
  CHECK_THROWS_AS(compose(phi, phi), InputError);
  CHECK(compose(sigma, id).linearity() == Linearity::Real);
}

TEST_CASE("rho after sigma is the identity on scalars", "[linear_map][transport]") {
  const auto c = compose(rho_map(1), sigma_map(1));
  oracle::Sampler s(47);
  for (int t = 0; t < 100; ++t) {
    CMat z(1, 1);
    z(0, 0) = s.cnormal();
    REQUIRE(std::abs(c(z)(0, 0) - z(0, 0)) <= 1e-12);
  }
}

TEST_CASE("compress, amplify and compose commute as expected",
          "[linear_map][property]") {
  oracle::Sampler s(48);
  for (int t = 0; t < 20; ++t) {
    const auto phi = LinearMap::conjugation(s.cmat(2, 3));
    const auto psi = LinearMap::conjugation(s.cmat(3, 2));
    const CMat b = s.cmat(2, 2);
    REQUIRE(compress(compose(psi, phi), b).max_difference(compose(compress(psi, b), phi)) <= 1e-10);
    const int k = s.integer(1, 3);
    REQUIRE(amplify(compose(psi, phi), k)
                .max_difference(compose(amplify(psi, k), amplify(phi, k))) <= 1e-10);
  }
}
