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

#include <vector>

#include "starlift/numeric.hpp"

namespace starlift {

/// Identifies C^{r x c} with R^{2rc}: real parts (column-major) then imaginary parts.
RVec realify(const CMat& m);
CMat unrealify(const RVec& v, Eigen::Index rows, Eigen::Index cols);

/// Orthonormal basis for the column space of `m`; singular values at or below
/// rank_tol * max(1, sigma_max) are treated as zero.
RMat orthonormal_columns(const RMat& m, double rank_tol = 1e-9);

/// Orthonormal basis of the null space of `m`.
RMat null_space(const RMat& m, double rank_tol = 1e-9);

/// A real-linear subspace of r x c complex matrices, stored as an orthonormal
/// basis of its image under realify().
///
/// Every subspace computation (real forms, tensor spans, kernels) runs over R
/// so that complex spans and real forms share one engine. A complex span is
/// the real span of {v, i v}.
class RealSubspace {
 public:
  RealSubspace(Eigen::Index rows, Eigen::Index cols);
  RealSubspace(Eigen::Index rows, Eigen::Index cols, RMat orthonormal_basis);

  static RealSubspace real_span(const std::vector<CMat>& generators,
                                double rank_tol = 1e-9);
  static RealSubspace complex_span(const std::vector<CMat>& generators,
                                   double rank_tol = 1e-9);

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  Eigen::Index dim() const { return basis_.cols(); }
  Eigen::Index ambient_dim() const { return 2 * rows_ * cols_; }
  const RMat& basis() const { return basis_; }

  /// Basis vectors reshaped back into matrices.
  std::vector<CMat> elements() const;

  CMat project(const CMat& m) const;
  /// Frobenius distance from `m` to the subspace.
  double residual(const CMat& m) const;
  bool contains(const CMat& m, double tol = 1e-9) const;
  /// Coordinates of the orthogonal projection in the stored basis.
  RVec coordinates(const CMat& m) const;

  RealSubspace sum(const RealSubspace& other, double rank_tol = 1e-9) const;
  RealSubspace intersect(const RealSubspace& other,
                         double rank_tol = 1e-9) const;

 private:
  void check_shape(const CMat& m) const;

  Eigen::Index rows_;
  Eigen::Index cols_;
  RMat basis_;
};

struct SubspaceComparison {
  Eigen::Index dim_a = 0;
  Eigen::Index dim_b = 0;
  /// Largest principal angle in radians; 0 when both spaces are trivial.
  double max_principal_angle = 0.0;
  bool equal = false;
};

/// Equality test: dimensions match and the largest principal angle is at most
/// angle_tol.
SubspaceComparison compare_subspaces(const RealSubspace& a,
                                     const RealSubspace& b,
                                     double angle_tol = 1e-6);

}  // namespace starlift
