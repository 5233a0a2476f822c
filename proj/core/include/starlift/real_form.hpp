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
#include <optional>
#include <string>
#include <vector>

#include "starlift/numeric.hpp"
#include "starlift/subspace.hpp"

namespace starlift {

/// Involutory *-antiautomorphism of M_n(C) of the form x -> u x^T u*.
///
/// u must be unitary with u^T = +u or u^T = -u; either sign makes the map an
/// involution. u = I is the transpose, whose real form is M_n(R).
class AntiAutomorphism {
 public:
  /// Throws InputError unless u is unitary and (anti)symmetric within tol.
  explicit AntiAutomorphism(CMat u, double tol = 1e-10);

  static AntiAutomorphism transpose(Eigen::Index n);

  const CMat& u() const { return u_; }
  Eigen::Index dim() const { return u_.rows(); }
  /// +1 when u^T = u, -1 when u^T = -u.
  int symmetry() const { return symmetry_; }
  bool is_transpose() const;

  CMat apply(const CMat& x) const;

  /// The antiautomorphism of M_k(M_n) = M_{kn} with unitary I_k (x) u. Its real
  /// form is M_k(A_Phi).
  AntiAutomorphism amplify(Eigen::Index k) const;
  /// Phi (x) transpose on M_n (x) M_m, unitary u (x) I_m.
  AntiAutomorphism tensor_transpose(Eigen::Index m) const;

 private:
  CMat u_;
  int symmetry_ = 1;
};

CMat apply_phi(const AntiAutomorphism& phi, const CMat& x);

struct RealDecomposition {
  CMat r;  ///< (x + Phi(x)*)/2, in the real form
  CMat s;  ///< (x - Phi(x)*)/(2i), in the real form
};

/// Splits x = r + i s with r, s in A_Phi.
RealDecomposition real_decompose(const AntiAutomorphism& phi, const CMat& x);

/// x -> Phi(x*): the real-linear, multiplicative, conjugate-homogeneous
/// involution fixing A_Phi pointwise. Equals r - i s.
CMat conj_phi(const AntiAutomorphism& phi, const CMat& x);

/// ||Phi(x) - x*||.
double real_form_residual(const AntiAutomorphism& phi, const CMat& x);
bool in_real_form(const AntiAutomorphism& phi, const CMat& x,
                  double tol = 1e-9);

/// Element of A_Phi; construction checks membership.
class RealFormElement {
 public:
  RealFormElement(const AntiAutomorphism& parent, CMat value,
                  double tol = 1e-9);
  const CMat& value() const { return value_; }

 private:
  CMat value_;
};

/// Real basis of A_Phi inside M_n(C). For the transpose this is the matrix
/// units E_jl in row-major order; otherwise an orthonormal basis (real
/// Frobenius inner product) of the fixed space of x -> Phi(x)*.
std::vector<CMat> real_form_basis(const AntiAutomorphism& phi);
RealSubspace real_form_space(const AntiAutomorphism& phi);

struct AntiAutomorphismReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double unitarity_defect = 0.0;
  double symmetry_defect = 0.0;
  double antimultiplicative = 0.0;  ///< max ||Phi(xy) - Phi(y)Phi(x)||
  double star_compatibility = 0.0;  ///< max ||Phi(x*) - Phi(x)*||
  double involution = 0.0;          ///< max ||Phi(Phi(x)) - x||
  bool pass = false;
  std::optional<std::string> error;
};

/// Samples random pairs and measures every axiom residual. A u that fails
/// unitarity or (anti)symmetry produces a failing report with `error` set;
/// this never throws for a square u.
AntiAutomorphismReport check_antiautomorphism(const CMat& u,
                                              std::size_t samples,
                                              std::uint64_t seed,
                                              double tol = 1e-9);

/// Unital *-closed subalgebra of M_n(C) presented by spanning matrices.
class StarAlgebra {
 public:
  /// Validates closure under products and adjoints (residual <= tol) and, if
  /// unital, that the identity lies in the span.
  StarAlgebra(Eigen::Index n, std::vector<CMat> span, bool unital,
              double tol = 1e-9);

  static StarAlgebra full(Eigen::Index n);
  static StarAlgebra diagonal(Eigen::Index n);
  /// Block-diagonal algebra M_{s1} + M_{s2} + ... acting on C^{sum s_i}.
  static StarAlgebra block_diagonal(const std::vector<Eigen::Index>& sizes);

  Eigen::Index n() const { return n_; }
  const std::vector<CMat>& span() const { return span_; }
  bool unital() const { return unital_; }
  /// Complex dimension.
  Eigen::Index dim() const { return space_.dim() / 2; }
  const RealSubspace& space() const { return space_; }
  bool contains(const CMat& x, double tol = 1e-9) const;

  /// Block sizes when the algebra is a full block-diagonal algebra.
  const std::vector<Eigen::Index>& blocks() const { return blocks_; }

  /// A_Phi intersected with this algebra, as a real subspace. Throws
  /// InputError if Phi does not map the algebra into itself.
  RealSubspace real_form(const AntiAutomorphism& phi, double tol = 1e-9) const;

 private:
  struct Unchecked {};
  StarAlgebra(Unchecked, Eigen::Index n, std::vector<CMat> span, bool unital);

  Eigen::Index n_ = 0;
  std::vector<CMat> span_;
  bool unital_ = false;
  RealSubspace space_;
  std::vector<Eigen::Index> blocks_;
};

}  // namespace starlift
