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


#include "starlift/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace starlift {

const char* to_string(Field f) { return f == Field::Real ? "R" : "C"; }

Matrix::Matrix(Field field, CMat values)
    : field_(field), values_(std::move(values)) {
  if (field_ == Field::Real && !is_real(values_)) {
    throw InputError("matrix declared real has nonzero imaginary entries");
  }
}

Matrix Matrix::real(const RMat& values) {
  return Matrix(Field::Real, values.cast<Complex>());
}

Matrix Matrix::complex(CMat values) {
  return Matrix(Field::Complex, std::move(values));
}

Matrix Matrix::infer(CMat values) {
  const Field f = is_real(values) ? Field::Real : Field::Complex;
  return Matrix(f, std::move(values));
}

bool Matrix::operator==(const Matrix& other) const {
  return field_ == other.field_ && values_.rows() == other.values_.rows() &&
         values_.cols() == other.values_.cols() && values_ == other.values_;
}

Tolerance::Tolerance(double e) : eps(e) {
  if (!(e >= 0.0)) throw InputError("tolerance must be nonnegative");
}

double op_norm(const CMat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMat> svd(m);
  return svd.singularValues()(0);
}

double col_norm1(const RMat& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

double col_norm1(const Matrix& m) {
  if (m.field() != Field::Real) {
    throw InputError("col_norm1 requires a real matrix");
  }
  return col_norm1(m.real_part());
}

double entrywise_norm1(const RMat& m) { return m.cwiseAbs().sum(); }

double real_norm1(const RMat& m, RealNormVariant variant) {
  return variant == RealNormVariant::InducedColumn ? col_norm1(m)
                                                   : entrywise_norm1(m);
}

void require_square(const CMat& m, const std::string& what) {
  if (m.rows() != m.cols()) {
    throw InputError(what + ": expected a square matrix, got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

CMat adjoint(const CMat& m) { return m.adjoint(); }

CMat hermitian_part(const CMat& m) { return (m + m.adjoint()) / 2.0; }

double psd_defect(const CMat& m, double hermitian_tol) {
  require_square(m, "psd_defect");
  if (m.size() == 0) return 0.0;
  const double herm_defect = op_norm(m - m.adjoint());
  if (herm_defect > hermitian_tol) {
    throw InputError("psd_defect: matrix is not Hermitian (defect " +
                     std::to_string(herm_defect) + ")");
  }
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(m),
                                         Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double positivity_defect(const CMat& m, double hermitian_tol) {
  require_square(m, "positivity_defect");
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(m),
                                         Eigen::EigenvaluesOnly);
  double defect = es.eigenvalues()(0);
  const double skew = op_norm((m - m.adjoint()) / 2.0);
  if (skew > hermitian_tol) defect = std::min(defect, -skew);
  return defect;
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMat matrix_unit(Eigen::Index n, Eigen::Index j, Eigen::Index l) {
  CMat e = CMat::Zero(n, n);
  e(j, l) = 1.0;
  return e;
}

Complex normalized_trace(const CMat& m) {
  require_square(m, "normalized_trace");
  if (m.rows() == 0) return 0.0;
  return m.trace() / static_cast<double>(m.rows());
}

double max_abs_diff(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError("shape mismatch: " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool is_real(const CMat& m, double tol) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (std::abs(m.data()[i].imag()) > tol) return false;
  }
  return true;
}

}  // namespace starlift
