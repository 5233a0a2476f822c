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


#pragma once

#include <functional>
#include <optional>
#include <string>

#include "starlift/linear_map.hpp"
#include "starlift/numeric.hpp"
#include "starlift/real_form.hpp"

namespace starlift {

/// Normalizer choice for theta_k.
///
/// `Normalized` divides by N(x) + 1 where N(x) = max_l sum_j (|a_jl| +
/// |b_jl|) depends on the input, so the map is not linear. `FixedLinear`
/// multiplies by a constant and is a genuine linear c.p. map.
struct ThetaScale {
  enum class Mode { Normalized, FixedLinear };

  Mode mode = Mode::Normalized;
  double fixed_value = 1.0;

  static ThetaScale normalized() { return {}; }
  /// Throws InputError unless value > 0.
  static ThetaScale fixed(double value);

  bool linear() const { return mode == Mode::FixedLinear; }
};

/// Parses "paper" or "fixed:<value>".
ThetaScale parse_theta_mode(const std::string& text);
std::string to_string(const ThetaScale& scale);

/// Entrywise a + ib -> [[a, b], [-b, a]]; M_k(C) -> M_2k(R).
RMat sigma_k(const CMat& x);
/// Blockwise [[a, b], [c, d]] -> (a + d)/2 + i (b - c)/2; M_2k(R) -> M_k(C).
/// Complex input is handled through the complex-linear extension w*(.)w.
CMat rho_k(const CMat& m);
/// max over columns of sum_j (|Re x_jl| + |Im x_jl|).
double theta_normalizer(const CMat& x);
RMat theta_k(const CMat& x, const ThetaScale& scale);
/// Entrywise a + ib -> diag(a, b).
RMat eta_k(const CMat& x);
/// Entrywise a + ib -> diag(a, |b|).
RMat eta1_k(const CMat& x);

/// scale * (a + b).
double upsilon(Complex z, double scale = 0.5);
/// diag(a, |b|) for a scalar a + ib.
RMat eta1(Complex z);
/// scale * (a + |b|).
double upsilon1(Complex z, double scale = 0.5);
/// Scalar-only entry points: reject anything but a 1x1 matrix.
RMat eta1(const CMat& x);
double upsilon1(const CMat& x, double scale = 0.5);

/// The 2k x k isometry I_k (x) (e1 + i e2)/sqrt(2); rho_k(m) = w* m w.
CMat rho_isometry(Eigen::Index k);

/// sigma_k as a real-linear map M_k(C) -> M_2k(R).
LinearMap sigma_map(Eigen::Index k);
/// The complex-linear compression m -> w* m w, M_2k(C) -> M_k(C); it agrees
/// with rho_k on real matrices.
LinearMap rho_map(Eigen::Index k);
/// theta_k in fixed-linear mode. Throws InputError for the nonlinear mode.
LinearMap theta_map(Eigen::Index k, const ThetaScale& scale);
/// eta_k as a real-linear map.
LinearMap eta_map(Eigen::Index k);
/// upsilon as a real-linear map C = M_1(C) -> R = M_1.
LinearMap upsilon_map(double scale = 0.5);

struct TransportedFactorization {
  LinearMap phi_prime;  ///< sigma_n o phi, into M_2n(R)
  LinearMap psi_prime;  ///< psi o rho_n
  /// max elementwise |psi' o phi' - psi o phi| over the domain basis
  double residual = 0.0;
};

/// Rewrites a factorization through M_n(C) into one through M_2n(R) with the
/// same composite.
TransportedFactorization transport_factorization(const LinearMap& phi,
                                                 const LinearMap& psi);

/// phi' = theta_k o phi o conj_phi.
///
/// In fixed-linear mode `linear` holds the tabulated real-linear map; in the
/// normalized mode only `evaluate` is meaningful and `nonlinear` is set.
struct RealifiedMap {
  Eigen::Index dom = 0;
  Eigen::Index cod = 0;  ///< 2k
  ThetaScale scale;
  bool nonlinear = false;
  std::function<CMat(const CMat&)> evaluate;
  std::optional<LinearMap> linear;

  CMat operator()(const CMat& x) const { return evaluate(x); }
};

RealifiedMap realify_map(const LinearMap& phi, const AntiAutomorphism& real_form,
                         const ThetaScale& scale);

}  // namespace starlift
