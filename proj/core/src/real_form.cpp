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


#include "starlift/real_form.hpp"

#include <algorithm>
#include <cmath>

#include "starlift/random.hpp"

namespace starlift {

namespace {

constexpr Complex kI(0.0, 1.0);

double unitarity_defect(const CMat& u) {
  return op_norm(u.adjoint() * u - CMat::Identity(u.rows(), u.cols()));
}

// Returns (defect, sign) for the better of u^T = u and u^T = -u.
std::pair<double, int> symmetry_of(const CMat& u) {
  const double sym = op_norm(u.transpose() - u);
  const double anti = op_norm(u.transpose() + u);
  return sym <= anti ? std::make_pair(sym, 1) : std::make_pair(anti, -1);
}

}  // namespace

AntiAutomorphism::AntiAutomorphism(CMat u, double tol) : u_(std::move(u)) {
  require_square(u_, "AntiAutomorphism");
  if (u_.rows() == 0) throw InputError("AntiAutomorphism: empty unitary");
  const double unit = unitarity_defect(u_);
  if (unit > tol) {
    throw InputError("AntiAutomorphism: u is not unitary (defect " +
                     std::to_string(unit) + ")");
  }
  const auto [defect, sign] = symmetry_of(u_);
  if (defect > tol) {
    throw InputError(
        "AntiAutomorphism: u is neither symmetric nor antisymmetric (defect " +
        std::to_string(defect) + ")");
  }
  symmetry_ = sign;
}

AntiAutomorphism AntiAutomorphism::transpose(Eigen::Index n) {
  return AntiAutomorphism(CMat::Identity(n, n));
}

bool AntiAutomorphism::is_transpose() const {
  return u_ == CMat::Identity(u_.rows(), u_.cols());
}

CMat AntiAutomorphism::apply(const CMat& x) const {
  if (x.rows() != dim() || x.cols() != dim()) {
    throw InputError("apply_phi: expected " + std::to_string(dim()) + "x" +
                     std::to_string(dim()) + " input, got " +
                     std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
  return u_ * x.transpose() * u_.adjoint();
}

AntiAutomorphism AntiAutomorphism::amplify(Eigen::Index k) const {
  return AntiAutomorphism(kron(CMat::Identity(k, k), u_));
}

AntiAutomorphism AntiAutomorphism::tensor_transpose(Eigen::Index m) const {
  return AntiAutomorphism(kron(u_, CMat::Identity(m, m)));
}

CMat apply_phi(const AntiAutomorphism& phi, const CMat& x) {
  return phi.apply(x);
}

RealDecomposition real_decompose(const AntiAutomorphism& phi, const CMat& x) {
  const CMat star = phi.apply(x).adjoint();
  return {(x + star) / 2.0, (x - star) / (2.0 * kI)};
}

CMat conj_phi(const AntiAutomorphism& phi, const CMat& x) {
  return phi.apply(x.adjoint());
}

double real_form_residual(const AntiAutomorphism& phi, const CMat& x) {
  return op_norm(phi.apply(x) - x.adjoint());
}

bool in_real_form(const AntiAutomorphism& phi, const CMat& x, double tol) {
  return real_form_residual(phi, x) <= tol;
}

RealFormElement::RealFormElement(const AntiAutomorphism& parent, CMat value,
                                 double tol)
    : value_(std::move(value)) {
  const double res = real_form_residual(parent, value_);
  if (res > tol) {
    throw InputError("element is not in the real form (residual " +
                     std::to_string(res) + ")");
  }
}

std::vector<CMat> real_form_basis(const AntiAutomorphism& phi) {
  const Eigen::Index n = phi.dim();
  if (phi.is_transpose()) {
    std::vector<CMat> units;
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index l = 0; l < n; ++l) units.push_back(matrix_unit(n, j, l));
    return units;
  }
  return real_form_space(phi).elements();
}

RealSubspace real_form_space(const AntiAutomorphism& phi) {
  const Eigen::Index n = phi.dim();
  std::vector<CMat> projected;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index l = 0; l < n; ++l) {
      const CMat e = matrix_unit(n, j, l);
      projected.push_back(real_decompose(phi, e).r);
      projected.push_back(real_decompose(phi, kI * e).r);
    }
  }
  return RealSubspace::real_span(projected);
}

AntiAutomorphismReport check_antiautomorphism(const CMat& u,
                                              std::size_t samples,
                                              std::uint64_t seed, double tol) {
  require_square(u, "check_antiautomorphism");
  if (samples == 0) throw InputError("check_antiautomorphism: samples >= 1");
  AntiAutomorphismReport report;
  report.samples = samples;
  report.seed = seed;
  report.unitarity_defect = unitarity_defect(u);
  report.symmetry_defect = symmetry_of(u).first;

  // Evaluate the axioms on the raw formula so a bad u still yields residuals.
  const auto phi = [&u](const CMat& x) -> CMat {
    return u * x.transpose() * u.adjoint();
  };
  Rng rng(seed);
  const Eigen::Index n = u.rows();
  for (std::size_t i = 0; i < samples; ++i) {
    const CMat x = rng.complex_gaussian(n, n);
    const CMat y = rng.complex_gaussian(n, n);
    const double scale = std::max(1.0, op_norm(x) * op_norm(y));
    report.antimultiplicative =
        std::max(report.antimultiplicative,
                 op_norm(phi(x * y) - phi(y) * phi(x)) / scale);
    report.star_compatibility =
        std::max(report.star_compatibility,
                 op_norm(phi(x.adjoint()) - phi(x).adjoint()) /
                     std::max(1.0, op_norm(x)));
    report.involution = std::max(
        report.involution, op_norm(phi(phi(x)) - x) / std::max(1.0, op_norm(x)));
  }

  if (report.unitarity_defect > tol) {
    report.error = "u is not unitary";
  } else if (report.symmetry_defect > tol) {
    report.error = "u is neither symmetric nor antisymmetric";
  }
  report.pass = !report.error && report.antimultiplicative <= tol &&
                report.star_compatibility <= tol && report.involution <= tol;
  return report;
}

StarAlgebra::StarAlgebra(Unchecked, Eigen::Index n, std::vector<CMat> span,
                         bool unital)
    : n_(n),
      span_(std::move(span)),
      unital_(unital),
      space_(RealSubspace::complex_span(span_)) {}

StarAlgebra::StarAlgebra(Eigen::Index n, std::vector<CMat> span, bool unital,
                         double tol)
    : n_(n), unital_(unital), space_(n, n) {
  if (span.empty()) throw InputError("StarAlgebra: empty span");
  for (const auto& s : span) {
    if (s.rows() != n || s.cols() != n) {
      throw InputError("StarAlgebra: span element is not " +
                       std::to_string(n) + "x" + std::to_string(n));
    }
  }
  span_ = std::move(span);
  space_ = RealSubspace::complex_span(span_);

  const auto elements = space_.elements();
  for (const auto& a : elements) {
    if (!space_.contains(a.adjoint(), tol)) {
      throw InputError("StarAlgebra: span is not closed under adjoint");
    }
    for (const auto& b : elements) {
      if (!space_.contains(a * b, tol)) {
        throw InputError("StarAlgebra: span is not closed under products");
      }
    }
  }
  if (unital_ && !space_.contains(CMat::Identity(n, n), tol)) {
    throw InputError("StarAlgebra: unital flag set but identity not in span");
  }
}

StarAlgebra StarAlgebra::full(Eigen::Index n) {
  std::vector<CMat> units;
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index l = 0; l < n; ++l) units.push_back(matrix_unit(n, j, l));
  StarAlgebra a(Unchecked{}, n, std::move(units), true);
  a.blocks_ = {n};
  return a;
}

StarAlgebra StarAlgebra::diagonal(Eigen::Index n) {
  std::vector<CMat> units;
  for (Eigen::Index j = 0; j < n; ++j) units.push_back(matrix_unit(n, j, j));
  StarAlgebra a(Unchecked{}, n, std::move(units), true);
  a.blocks_.assign(static_cast<std::size_t>(n), 1);
  return a;
}

StarAlgebra StarAlgebra::block_diagonal(
    const std::vector<Eigen::Index>& sizes) {
  if (sizes.empty()) throw InputError("block_diagonal: no blocks");
  Eigen::Index n = 0;
  for (auto s : sizes) {
    if (s <= 0) throw InputError("block_diagonal: block sizes must be positive");
    n += s;
  }
  std::vector<CMat> units;
  Eigen::Index offset = 0;
  for (auto s : sizes) {
    for (Eigen::Index j = 0; j < s; ++j)
      for (Eigen::Index l = 0; l < s; ++l)
        units.push_back(matrix_unit(n, offset + j, offset + l));
    offset += s;
  }
  StarAlgebra a(Unchecked{}, n, std::move(units), true);
  a.blocks_ = sizes;
  return a;
}

bool StarAlgebra::contains(const CMat& x, double tol) const {
  return space_.contains(x, tol);
}

RealSubspace StarAlgebra::real_form(const AntiAutomorphism& phi,
                                    double tol) const {
  if (phi.dim() != n_) throw InputError("real_form: dimension mismatch");
  std::vector<CMat> projected;
  for (const auto& a : space_.elements()) {
    if (!space_.contains(phi.apply(a), tol)) {
      throw InputError("real_form: Phi does not preserve the algebra");
    }
    projected.push_back(real_decompose(phi, a).r);
  }
  return RealSubspace::real_span(projected);
}

}  // namespace starlift
