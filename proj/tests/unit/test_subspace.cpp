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
#include "starlift/subspace.hpp"

using namespace starlift;

namespace {
constexpr Complex kI(0.0, 1.0);
}

TEST_CASE("realify and unrealify are inverse", "[subspace]") {
  oracle::Sampler s(21);
  const CMat m = s.cmat(3, 2);
  CHECK(unrealify(realify(m), 3, 2) == m);
  CHECK(realify(m).size() == 12);
  CHECK_THROWS_AS(unrealify(RVec::Zero(5), 1, 2), InputError);
}

TEST_CASE("real and complex spans have the expected dimensions", "[subspace]") {
  std::vector<CMat> units;
  for (int j = 0; j < 2; ++j)
    for (int l = 0; l < 2; ++l) units.push_back(oracle::unit(2, j, l));
  CHECK(RealSubspace::real_span(units).dim() == 4);
  CHECK(RealSubspace::complex_span(units).dim() == 8);
  // Linearly dependent generators are pruned.
  units.push_back(units[0] + 2.0 * units[3]);
  CHECK(RealSubspace::real_span(units).dim() == 4);
  CHECK_THROWS_AS(RealSubspace::real_span({}), InputError);
  CHECK_THROWS_AS(RealSubspace::real_span({CMat::Zero(2, 2), CMat::Zero(3, 3)}),
                  InputError);
}

TEST_CASE("membership, projection and coordinates", "[subspace]") {
  const RealSubspace reals = RealSubspace::real_span(
      {oracle::unit(2, 0, 0), oracle::unit(2, 0, 1), oracle::unit(2, 1, 0),
       oracle::unit(2, 1, 1)});
  CMat x(2, 2);
  x << 1.0, 2.0, 3.0, 4.0;
  CHECK(reals.contains(x));
  CHECK_FALSE(reals.contains(kI * x));
  CHECK(reals.residual(kI * x) == Catch::Approx(x.norm()));
  CHECK(max_abs_diff(reals.project(x + kI * x), x) <= 1e-12);
  const RVec coords = reals.coordinates(x);
  CHECK((reals.basis() * coords - realify(x)).norm() <= 1e-12);
  CHECK_THROWS_AS(reals.contains(CMat::Zero(3, 3)), InputError);
}

TEST_CASE("sum and intersection", "[subspace]") {
  const RealSubspace a = RealSubspace::real_span({oracle::unit(2, 0, 0), oracle::unit(2, 0, 1)});
  const RealSubspace b = RealSubspace::real_span({oracle::unit(2, 0, 1), oracle::unit(2, 1, 1)});
  CHECK(a.sum(b).dim() == 3);
  const RealSubspace cap = a.intersect(b);
  REQUIRE(cap.dim() == 1);
  CHECK(cap.contains(oracle::unit(2, 0, 1)));
  const RealSubspace imag = RealSubspace::real_span({kI * oracle::unit(2, 0, 0)});
  CHECK(a.intersect(imag).dim() == 0);
}

TEST_CASE("compare_subspaces", "[subspace]") {
  const RealSubspace a = RealSubspace::real_span({oracle::unit(2, 0, 0), oracle::unit(2, 0, 1)});
  const RealSubspace same = RealSubspace::real_span(
      {oracle::unit(2, 0, 0) + oracle::unit(2, 0, 1), oracle::unit(2, 0, 0) - oracle::unit(2, 0, 1)});
  const auto eq = compare_subspaces(a, same);
  CHECK(eq.equal);
  CHECK(eq.max_principal_angle <= 1e-12);

  // Rotating one direction by a known angle yields that principal angle.
  const double t = 0.3;
  const RealSubspace tilted = RealSubspace::real_span(
      {oracle::unit(2, 0, 0), std::cos(t) * oracle::unit(2, 0, 1) + std::sin(t) * oracle::unit(2, 1, 1)});
  const auto cmp = compare_subspaces(a, tilted);
  CHECK_FALSE(cmp.equal);
  CHECK(cmp.max_principal_angle == Catch::Approx(t).margin(1e-12));

  const auto dim = compare_subspaces(a, RealSubspace::real_span({oracle::unit(2, 0, 0)}));
  CHECK_FALSE(dim.equal);
  CHECK(dim.dim_a == 2);
  CHECK(dim.dim_b == 1);

  const auto empty = compare_subspaces(RealSubspace(2, 2), RealSubspace(2, 2));
  CHECK(empty.equal);
  CHECK(empty.max_principal_angle == 0.0);
  CHECK_THROWS_AS(compare_subspaces(RealSubspace(2, 2), RealSubspace(3, 3)), InputError);
}

TEST_CASE("null_space matches the Gaussian elimination oracle",
          "[subspace][property]") {
  oracle::Sampler s(22);
  for (int t = 0; t < 50; ++t) {
    const int rows = s.integer(1, 8), cols = s.integer(1, 8);
    const int r = s.integer(0, std::min(rows, cols));
    const RMat m = s.rmat(rows, r) * s.rmat(r, cols);
    const RMat k = null_space(m);
    const RMat ok = oracle::kernel(m, 1e-8);
    REQUIRE(k.cols() == ok.cols());
    if (k.cols() == 0) continue;
    REQUIRE((m * k).cwiseAbs().maxCoeff() <= 1e-9 * std::max(1.0, m.norm()));
    REQUIRE(oracle::same_span(k, ok, 1e-8));
  }
}
