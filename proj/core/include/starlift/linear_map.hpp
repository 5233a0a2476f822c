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

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "starlift/numeric.hpp"
#include "starlift/real_form.hpp"

namespace starlift {

enum class Linearity { Complex, Real };

const char* to_string(Linearity l);

/// Linear map M_dom(C) -> M_cod(C), stored by its images on a fixed basis.
///
/// Basis order (also the serialized order):
///  - Complex: E_11, E_12, ..., E_nn (row-major matrix units), n^2 images.
///  - Real: the n^2 matrix units followed by i E_11, ..., i E_nn, 2 n^2 images.
///
/// A real-linear map "on A_Phi" is stored on the whole of M_n(C); only its
/// values on A_Phi matter to complexify() and to real-form positivity checks.
class LinearMap {
 public:
  using Function = std::function<CMat(const CMat&)>;

  LinearMap(Eigen::Index dom, Eigen::Index cod, Linearity linearity,
            std::vector<CMat> images);

  /// Tabulates f on the basis for the requested linearity.
  static LinearMap from_function(Eigen::Index dom, Eigen::Index cod,
                                 Linearity linearity, const Function& f);

  static LinearMap identity(Eigen::Index n);
  static LinearMap zero(Eigen::Index dom, Eigen::Index cod,
                        Linearity linearity = Linearity::Complex);
  static LinearMap transpose(Eigen::Index n);
  /// x -> v* x v for v of shape dom x cod.
  static LinearMap conjugation(const CMat& v);

  static std::size_t basis_size(Eigen::Index dom, Linearity linearity);
  static CMat basis_element(Eigen::Index dom, Linearity linearity,
                            std::size_t index);

  Eigen::Index dom_dim() const { return dom_; }
  Eigen::Index cod_dim() const { return cod_; }
  Linearity linearity() const { return linearity_; }
  const std::vector<CMat>& images() const { return images_; }
  /// Real when every image is real.
  Field cod_field() const;

  CMat apply(const CMat& x) const;
  CMat operator()(const CMat& x) const { return apply(x); }

  /// Applies the map blockwise to an element of M_k(M_dom).
  CMat apply_amplified(const CMat& x, Eigen::Index k) const;

  LinearMap scaled(double factor) const;
  /// Largest elementwise difference of the maps on the real basis.
  double max_difference(const LinearMap& other) const;

 private:
  Eigen::Index dom_;
  Eigen::Index cod_;
  Linearity linearity_;
  std::vector<CMat> images_;
};

/// Sum_{jl} E_jl (x) phi(E_jl).
struct ChoiMatrix {
  CMat value;
};

/// Throws InputError for real-linear maps.
ChoiMatrix choi(const LinearMap& phi);

/// Positivity defect of the Choi matrix: >= -tol iff phi is completely
/// positive. A non-Hermitian Choi matrix (phi not *-preserving) reports the
/// negated norm of its anti-Hermitian part.
double cp_defect(const LinearMap& phi, double tol = 1e-9);

struct RealCpOptions {
  /// When set, positive elements are drawn from M_k(A_Phi) instead of M_k(M_n(C)).
  std::optional<AntiAutomorphism> real_form;
  std::size_t samples = 32;
  std::uint64_t seed = 0;
  /// Additional positive elements of M_k(M_n) evaluated before random ones.
  std::vector<CMat> probes;
  double tol = 1e-9;
};

struct RealCpReport {
  Eigen::Index level = 0;
  /// min over sampled positive p of positivity_defect(id_k (x) phi (p))
  double defect = 0.0;
  /// max ||phi(x)* - phi(x*)|| over sampled x
  double self_adjoint_defect = 0.0;
  CMat witness;         ///< the positive element attaining `defect`
  CMat witness_image;   ///< its image
  std::size_t evaluated = 0;
  bool positive(double tol) const {
    return defect >= -tol && self_adjoint_defect <= tol;
  }
};

/// k-positivity check by sampled amplification for real-linear (or
/// complex-linear) maps.
///
/// The sample always contains the rank-one element sum_{j,l<k} E_jl (x) E_jl,
/// whose image at level k = dom is the Choi matrix, then the caller's probes,
/// then `samples` random elements c*c normalized to unit norm.
RealCpReport cp_defect_real(const LinearMap& phi, Eigen::Index level,
                            const RealCpOptions& options = {});

/// Complex-linear extension phi^C(a + ib) = phi(a) + i phi(b) using the
/// decomposition relative to Phi.
LinearMap complexify(const LinearMap& phi, const AntiAutomorphism& real_form);

/// Complexification of a map given by its values on a real basis of A_Phi.
/// Throws InputError if a basis element is not in A_Phi or the basis does not
/// span A_Phi.
LinearMap complexify(const AntiAutomorphism& real_form,
                     const std::vector<CMat>& basis,
                     const std::vector<CMat>& images, double tol = 1e-9);

/// id_{M_k} (x) phi.
LinearMap amplify(const LinearMap& phi, Eigen::Index k);

/// x -> b* phi(x) b; b has phi.cod_dim() rows.
LinearMap compress(const LinearMap& phi, const CMat& b);

/// psi o phi. Complex-linear iff both factors are.
LinearMap compose(const LinearMap& psi, const LinearMap& phi);

}  // namespace starlift
