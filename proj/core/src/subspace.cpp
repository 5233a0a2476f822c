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


#include "starlift/subspace.hpp"

#include <algorithm>
#include <cmath>

namespace starlift {

RVec realify(const CMat& m) {
  const Eigen::Index n = m.size();
  RVec v(2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v(i) = m.data()[i].real();
    v(n + i) = m.data()[i].imag();
  }
  return v;
}

CMat unrealify(const RVec& v, Eigen::Index rows, Eigen::Index cols) {
  const Eigen::Index n = rows * cols;
  if (v.size() != 2 * n) throw InputError("unrealify: length mismatch");
  CMat m(rows, cols);
  for (Eigen::Index i = 0; i < n; ++i) m.data()[i] = Complex(v(i), v(n + i));
  return m;
}

namespace {

double threshold(const RVec& singular_values, double rank_tol) {
  const double top = singular_values.size() > 0 ? singular_values(0) : 0.0;
  return rank_tol * std::max(1.0, top);
}

}  // namespace

RMat orthonormal_columns(const RMat& m, double rank_tol) {
  if (m.cols() == 0 || m.rows() == 0) return RMat(m.rows(), 0);
  Eigen::JacobiSVD<RMat> svd(m, Eigen::ComputeThinU);
  const RVec& s = svd.singularValues();
  const double cut = threshold(s, rank_tol);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cut) ++rank;
  return svd.matrixU().leftCols(rank);
}

RMat null_space(const RMat& m, double rank_tol) {
  const Eigen::Index n = m.cols();
  if (n == 0) return RMat(0, 0);
  if (m.rows() == 0) return RMat::Identity(n, n);
  Eigen::JacobiSVD<RMat> svd(m, Eigen::ComputeFullV);
  const RVec& s = svd.singularValues();
  const double cut = threshold(s, rank_tol);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cut) ++rank;
  return svd.matrixV().rightCols(n - rank);
}

RealSubspace::RealSubspace(Eigen::Index rows, Eigen::Index cols)
    : rows_(rows), cols_(cols), basis_(2 * rows * cols, 0) {}

RealSubspace::RealSubspace(Eigen::Index rows, Eigen::Index cols,
                           RMat orthonormal_basis)
    : rows_(rows), cols_(cols), basis_(std::move(orthonormal_basis)) {
  if (basis_.rows() != 2 * rows_ * cols_) {
    throw InputError("RealSubspace: basis length does not match shape");
  }
}

RealSubspace RealSubspace::real_span(const std::vector<CMat>& generators,
                                     double rank_tol) {
  if (generators.empty()) throw InputError("real_span: no generators");
  const Eigen::Index r = generators.front().rows();
  const Eigen::Index c = generators.front().cols();
  RMat stacked(2 * r * c, static_cast<Eigen::Index>(generators.size()));
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].rows() != r || generators[i].cols() != c) {
      throw InputError("real_span: generators have mixed shapes");
    }
    stacked.col(static_cast<Eigen::Index>(i)) = realify(generators[i]);
  }
  return RealSubspace(r, c, orthonormal_columns(stacked, rank_tol));
}

RealSubspace RealSubspace::complex_span(const std::vector<CMat>& generators,
                                        double rank_tol) {
  std::vector<CMat> doubled;
  doubled.reserve(2 * generators.size());
  for (const auto& g : generators) {
    doubled.push_back(g);
    doubled.push_back(Complex(0.0, 1.0) * g);
  }
  return real_span(doubled, rank_tol);
}

std::vector<CMat> RealSubspace::elements() const {
  std::vector<CMat> out;
  out.reserve(static_cast<std::size_t>(dim()));
  for (Eigen::Index i = 0; i < dim(); ++i) {
    out.push_back(unrealify(basis_.col(i), rows_, cols_));
  }
  return out;
}

void RealSubspace::check_shape(const CMat& m) const {
  if (m.rows() != rows_ || m.cols() != cols_) {
    throw InputError("RealSubspace: element shape mismatch");
  }
}

RVec RealSubspace::coordinates(const CMat& m) const {
  check_shape(m);
  return basis_.transpose() * realify(m);
}

CMat RealSubspace::project(const CMat& m) const {
  return unrealify(basis_ * coordinates(m), rows_, cols_);
}

double RealSubspace::residual(const CMat& m) const {
  check_shape(m);
  const RVec v = realify(m);
  return (v - basis_ * (basis_.transpose() * v)).norm();
}

bool RealSubspace::contains(const CMat& m, double tol) const {
  return residual(m) <= tol;
}

RealSubspace RealSubspace::sum(const RealSubspace& other,
                               double rank_tol) const {
  if (other.rows_ != rows_ || other.cols_ != cols_) {
    throw InputError("RealSubspace::sum: shape mismatch");
  }
  RMat stacked(basis_.rows(), dim() + other.dim());
  stacked << basis_, other.basis_;
  return RealSubspace(rows_, cols_, orthonormal_columns(stacked, rank_tol));
}

RealSubspace RealSubspace::intersect(const RealSubspace& other,
                                     double rank_tol) const {
  if (other.rows_ != rows_ || other.cols_ != cols_) {
    throw InputError("RealSubspace::intersect: shape mismatch");
  }
  // x = B1 s = B2 t  <=>  [B1, -B2] (s, t) = 0
  RMat system(basis_.rows(), dim() + other.dim());
  system << basis_, -other.basis_;
  const RMat kernel = null_space(system, rank_tol);
  const RMat image = basis_ * kernel.topRows(dim());
  return RealSubspace(rows_, cols_, orthonormal_columns(image, rank_tol));
}

SubspaceComparison compare_subspaces(const RealSubspace& a,
                                     const RealSubspace& b, double angle_tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError("compare_subspaces: shape mismatch");
  }
  SubspaceComparison out;
  out.dim_a = a.dim();
  out.dim_b = b.dim();
  if (a.dim() == 0 || b.dim() == 0) {
    out.max_principal_angle = (a.dim() == b.dim()) ? 0.0 : M_PI / 2;
  } else {
    // For equal dimensions the sine of the largest principal angle is the
    // spectral norm of the component of b's basis orthogonal to a.
    if (a.dim() == b.dim()) {
      const RMat residual =
          b.basis() - a.basis() * (a.basis().transpose() * b.basis());
      Eigen::JacobiSVD<RMat> svd(residual);
      out.max_principal_angle =
          std::asin(std::clamp(svd.singularValues()(0), 0.0, 1.0));
    } else {
      out.max_principal_angle = M_PI / 2;
    }
  }
  out.equal = out.dim_a == out.dim_b && out.max_principal_angle <= angle_tol;
  return out;
}

}  // namespace starlift
