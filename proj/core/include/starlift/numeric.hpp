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

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace starlift {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

/// Raised for malformed inputs: bad dimensions, wrong field, schema violations.
/// The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Field { Real, Complex };

const char* to_string(Field f);

/// Dense rectangular matrix tagged with its scalar field.
///
/// Entries are always held as complex doubles; a Real matrix has every
/// imaginary part exactly zero. This is the value type that crosses the
/// serialization boundary; numerical kernels operate on CMat directly.
class Matrix {
 public:
  Matrix() = default;

  /// Throws InputError if field is Real and any entry has nonzero imaginary part.
  Matrix(Field field, CMat values);

  static Matrix real(const RMat& values);
  static Matrix complex(CMat values);
  /// Real when every imaginary part is zero, Complex otherwise.
  static Matrix infer(CMat values);

  Field field() const { return field_; }
  Eigen::Index rows() const { return values_.rows(); }
  Eigen::Index cols() const { return values_.cols(); }
  const CMat& values() const { return values_; }
  RMat real_part() const { return values_.real(); }

  bool operator==(const Matrix& other) const;

 private:
  Field field_ = Field::Complex;
  CMat values_;
};

struct Tolerance {
  double eps = 1e-9;

  Tolerance() = default;
  explicit Tolerance(double e);
};

/// Largest singular value.
double op_norm(const CMat& m);

/// Induced 1-norm: maximum absolute column sum.
double col_norm1(const RMat& m);
/// Rejects Complex-field input.
double col_norm1(const Matrix& m);

/// Sum of absolute entries; the alternative reading of the real 1-norm.
double entrywise_norm1(const RMat& m);

enum class RealNormVariant { InducedColumn, Entrywise };
double real_norm1(const RMat& m, RealNormVariant variant);

/// Minimum eigenvalue of the Hermitian part (M + M*)/2.
///
/// Throws InputError if M is not square or ||M - M*|| exceeds hermitian_tol.
double psd_defect(const CMat& m, double hermitian_tol = 1e-9);

/// Positivity defect for matrices that need not be self-adjoint.
///
/// Returns min(lambda_min(H), -||K||) where H and K are the Hermitian and
/// anti-Hermitian parts; K is only counted when ||K|| exceeds hermitian_tol.
/// Nonnegative (within tolerance) iff M is positive semidefinite.
double positivity_defect(const CMat& m, double hermitian_tol = 1e-9);

CMat kron(const CMat& a, const CMat& b);

CMat hermitian_part(const CMat& m);
CMat adjoint(const CMat& m);

/// Elementary matrix unit E_{jl} of size n x n.
CMat matrix_unit(Eigen::Index n, Eigen::Index j, Eigen::Index l);

/// Trace divided by dimension.
Complex normalized_trace(const CMat& m);

/// Max absolute entry of a - b; throws InputError on shape mismatch.
double max_abs_diff(const CMat& a, const CMat& b);

bool is_real(const CMat& m, double tol = 0.0);

void require_square(const CMat& m, const std::string& what);

}  // namespace starlift
