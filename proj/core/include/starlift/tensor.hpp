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

#include <optional>
#include <string>
#include <vector>

#include "starlift/linear_map.hpp"
#include "starlift/real_form.hpp"
#include "starlift/subspace.hpp"

namespace starlift {

/// A (x)_min B presented on Kronecker products: A in M_nA, B in M_nB, the
/// product in M_{nA nB} with A as the outer (block) index. In finite
/// dimension the minimal norm is the operator norm of this representation.
class TensorAlgebra {
 public:
  TensorAlgebra(StarAlgebra a, StarAlgebra b);

  const StarAlgebra& left() const { return a_; }
  const StarAlgebra& right() const { return b_; }
  Eigen::Index n() const { return a_.n() * b_.n(); }
  /// Complex span of kron(a_i, b_j), as a real subspace.
  const RealSubspace& space() const { return space_; }
  /// Complex dimension.
  Eigen::Index dim() const { return space_.dim() / 2; }

 private:
  StarAlgebra a_;
  StarAlgebra b_;
  RealSubspace space_;
};

TensorAlgebra min_tensor(const StarAlgebra& a, const StarAlgebra& b);

/// Real span of {kron(x, y)} for x, y running over the given spanning sets;
/// the zero subspace of M_{nA nB} when either set is empty.
RealSubspace tensor_span(const std::vector<CMat>& left,
                         const std::vector<CMat>& right, Eigen::Index n_left,
                         Eigen::Index n_right);

/// x -> tr(W x), or Re tr(W x) when real_valued.
struct Functional {
  CMat weight;
  bool real_valued = false;

  Complex operator()(const CMat& x) const;

  static Functional normalized_trace(Eigen::Index n);
};

/// Complexification (relative to Phi) of a real-valued functional on A_Phi.
Functional complexify(const Functional& phi, const AntiAutomorphism& real_form);

/// Complex dual functionals of a complex basis of its span: e*_a(e_b) = delta_ab.
std::vector<Functional> dual_functionals(const std::vector<CMat>& basis);

/// R_phi(a (x) b) = phi(a) b, A (x) B -> B. phi must be complex-linear; a
/// real-valued functional on A_Phi is complexified first by the caller.
LinearMap slice_right(const Functional& phi, Eigen::Index n_left,
                      Eigen::Index n_right);

/// L_psi(sum_a e_a (x) y_a) = sum_a psi(y_a) e_a for a complex basis {e_a} of
/// the left algebra; real-linear when psi is real-valued.
LinearMap slice_left(const Functional& psi, const std::vector<CMat>& left_basis,
                     Eigen::Index n_right);

enum class ScalarField { Real, Complex };

struct FubiniResult {
  RealSubspace space;
  /// Real span of A1 (x) B1 for comparison.
  RealSubspace product;
  SubspaceComparison comparison;
  ScalarField psi_field = ScalarField::Real;
};

/// F(A1, B1, A_Phi (x) B): elements of the real span of A_Phi (x) B all of
/// whose right slices lie in B1 and left slices in A1, computed as the kernel
/// of the stacked membership residuals over dual spanning sets.
///
/// A1 is a real subspace of A_Phi (spanning elements), B1 a complex subspace of
/// B. `psi_field` selects real- or complex-valued functionals on B for the left
/// slices.
FubiniResult fubini(const std::vector<CMat>& a1, const std::vector<CMat>& b1,
                    const StarAlgebra& a, const AntiAutomorphism& real_form,
                    const StarAlgebra& b,
                    ScalarField psi_field = ScalarField::Real);

/// A block-diagonal algebra B with the ideal I given by a subset of its
/// blocks; the quotient B/I is realized as compression to the other blocks.
class IdealPresentation {
 public:
  /// Throws InputError if B has no block structure or an index is invalid.
  IdealPresentation(StarAlgebra b, std::vector<std::size_t> ideal_blocks);

  const StarAlgebra& algebra() const { return b_; }
  const std::vector<std::size_t>& ideal_blocks() const { return blocks_; }
  /// Spanning matrix units of I (empty for the zero ideal).
  const std::vector<CMat>& ideal_span() const { return ideal_span_; }
  /// Projection onto the coordinates of the non-ideal blocks.
  const CMat& quotient_projector() const { return projector_; }

  CMat quotient(const CMat& x) const;
  /// max residual of b x, x b outside I for spanning b, x; and of pi(x), x in I.
  double ideal_residual() const;

 private:
  StarAlgebra b_;
  std::vector<std::size_t> blocks_;
  std::vector<CMat> ideal_span_;
  CMat projector_;
};

struct KernelComparison {
  Eigen::Index kernel_dim = 0;
  Eigen::Index expected_dim = 0;
  double max_principal_angle = 0.0;
  bool equal = false;
};

struct ExactnessReport {
  KernelComparison real;     ///< ker(id_{A_Phi} (x) pi) vs span(A_Phi (x) I)
  KernelComparison complex;  ///< ker(id_A (x) pi) vs A (x) I
  KernelComparison fubini;   ///< F(A_Phi, I) vs span(A_Phi (x) I)
  /// span(A_Phi (x) B) + span(i A_Phi (x) B) vs A (x) B
  KernelComparison decomposition;
  double ideal_residual = 0.0;
  bool exact() const {
    return real.equal && complex.equal && fubini.equal && decomposition.equal;
  }
};

/// id (x) pi on M_nA (x) M_nB.
CMat tensor_quotient(const IdealPresentation& ideal, Eigen::Index n_left,
                     const CMat& x);

/// Kernel of id (x) pi restricted to a real subspace of the tensor space.
RealSubspace tensor_quotient_kernel(const IdealPresentation& ideal,
                                    Eigen::Index n_left,
                                    const RealSubspace& domain);

ExactnessReport exactness_check(const StarAlgebra& a,
                                const AntiAutomorphism& real_form,
                                const IdealPresentation& ideal,
                                double angle_tol = 1e-6);

struct TensorDecomposition {
  CMat real_part;       ///< in the real span of A_Phi (x) B
  CMat imaginary_part;  ///< in the real span of i A_Phi (x) B
};

/// x = x1 + x2 by decomposing the A-leg of x's expansion over B's real matrix
/// units; equivalently the decomposition relative to Phi (x) transpose.
/// Throws InputError if x is not in the tensor span.
TensorDecomposition decompose_tensor(const CMat& x, const TensorAlgebra& t,
                                     const AntiAutomorphism& real_form);

}  // namespace starlift
