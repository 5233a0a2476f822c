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


#include "starlift/tensor.hpp"

#include <algorithm>
#include <set>

namespace starlift {

namespace {

constexpr Complex kI(0.0, 1.0);

std::vector<CMat> kron_products(const std::vector<CMat>& left,
                                const std::vector<CMat>& right) {
  std::vector<CMat> out;
  out.reserve(left.size() * right.size());
  for (const auto& x : left)
    for (const auto& y : right) out.push_back(kron(x, y));
  return out;
}

// Residual of v against its projection onto `space`, as a real vector.
RVec membership_residual(const RealSubspace& space, const CMat& m) {
  const RVec v = realify(m);
  if (space.dim() == 0) return v;
  return v - space.basis() * (space.basis().transpose() * v);
}

RealSubspace span_or_zero(const std::vector<CMat>& gens, Eigen::Index n,
                          bool complex) {
  if (gens.empty()) return RealSubspace(n, n);
  return complex ? RealSubspace::complex_span(gens)
                 : RealSubspace::real_span(gens);
}

KernelComparison to_kernel_comparison(const SubspaceComparison& c) {
  return {c.dim_a, c.dim_b, c.max_principal_angle, c.equal};
}

}  // namespace

TensorAlgebra::TensorAlgebra(StarAlgebra a, StarAlgebra b)
    : a_(std::move(a)),
      b_(std::move(b)),
      space_(RealSubspace::complex_span(kron_products(a_.space().elements(),
                                                      b_.space().elements()))) {}

TensorAlgebra min_tensor(const StarAlgebra& a, const StarAlgebra& b) {
  return TensorAlgebra(a, b);
}

RealSubspace tensor_span(const std::vector<CMat>& left,
                         const std::vector<CMat>& right, Eigen::Index n_left,
                         Eigen::Index n_right) {
  if (left.empty() || right.empty()) {
    return RealSubspace(n_left * n_right, n_left * n_right);
  }
  return RealSubspace::real_span(kron_products(left, right));
}

Complex Functional::operator()(const CMat& x) const {
  const Complex v = (weight * x).trace();
  return real_valued ? Complex(v.real(), 0.0) : v;
}

Functional Functional::normalized_trace(Eigen::Index n) {
  return {CMat::Identity(n, n) / static_cast<double>(n), false};
}

Functional complexify(const Functional& phi, const AntiAutomorphism& real_form) {
  const Eigen::Index n = real_form.dim();
  CMat weight(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index l = 0; l < n; ++l) {
      const auto [r, s] = real_decompose(real_form, matrix_unit(n, j, l));
      // tr(W E_jl) = W(l, j)
      weight(l, j) = phi(r) + kI * phi(s);
    }
  }
  return {weight, false};
}

std::vector<Functional> dual_functionals(const std::vector<CMat>& basis) {
  const auto m = static_cast<Eigen::Index>(basis.size());
  CMat gram(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b)
      gram(a, b) = (basis[static_cast<std::size_t>(a)].adjoint() *
                    basis[static_cast<std::size_t>(b)])
                       .trace();
  Eigen::FullPivLU<CMat> lu(gram);
  if (!lu.isInvertible()) {
    throw InputError("dual_functionals: basis is not linearly independent");
  }
  const CMat inv = lu.inverse();
  std::vector<Functional> out;
  for (Eigen::Index a = 0; a < m; ++a) {
    CMat w = CMat::Zero(basis.front().cols(), basis.front().rows());
    for (Eigen::Index g = 0; g < m; ++g)
      w += inv(a, g) * basis[static_cast<std::size_t>(g)].adjoint();
    out.push_back({w, false});
  }
  return out;
}

LinearMap slice_right(const Functional& phi, Eigen::Index n_left,
                      Eigen::Index n_right) {
  if (phi.real_valued) {
    throw InputError(
        "slice_right: functional must be complex-linear; complexify it first");
  }
  if (phi.weight.rows() != n_left || phi.weight.cols() != n_left) {
    throw InputError("slice_right: functional is not defined on M_" +
                     std::to_string(n_left));
  }
  return LinearMap::from_function(
      n_left * n_right, n_right, Linearity::Complex,
      [&](const CMat& x) -> CMat {
        CMat out = CMat::Zero(n_right, n_right);
        for (Eigen::Index j = 0; j < n_left; ++j)
          for (Eigen::Index l = 0; l < n_left; ++l)
            out += phi.weight(l, j) *
                   x.block(j * n_right, l * n_right, n_right, n_right);
        return out;
      });
}

LinearMap slice_left(const Functional& psi, const std::vector<CMat>& left_basis,
                     Eigen::Index n_right) {
  if (left_basis.empty()) throw InputError("slice_left: empty basis");
  if (psi.weight.rows() != n_right || psi.weight.cols() != n_right) {
    throw InputError("slice_left: functional is not defined on M_" +
                     std::to_string(n_right));
  }
  const Eigen::Index n_left = left_basis.front().rows();
  std::vector<LinearMap> coordinate_slices;
  for (const auto& dual : dual_functionals(left_basis)) {
    coordinate_slices.push_back(slice_right(dual, n_left, n_right));
  }
  const Linearity lin =
      psi.real_valued ? Linearity::Real : Linearity::Complex;
  return LinearMap::from_function(
      n_left * n_right, n_left, lin, [&](const CMat& x) -> CMat {
        CMat out = CMat::Zero(n_left, n_left);
        for (std::size_t a = 0; a < left_basis.size(); ++a) {
          out += psi(coordinate_slices[a].apply(x)) * left_basis[a];
        }
        return out;
      });
}

FubiniResult fubini(const std::vector<CMat>& a1, const std::vector<CMat>& b1,
                    const StarAlgebra& a, const AntiAutomorphism& real_form,
                    const StarAlgebra& b, ScalarField psi_field) {
  const Eigen::Index na = a.n();
  const Eigen::Index nb = b.n();
  const auto real_a = a.real_form(real_form).elements();
  const auto real_b = b.space().elements();
  const RealSubspace ambient = tensor_span(real_a, real_b, na, nb);
  if (ambient.dim() == 0) throw InputError("fubini: degenerate tensor span");

  for (const auto& x : a1) {
    if (!in_real_form(real_form, x) || !a.contains(x)) {
      throw InputError("fubini: A1 element is not in the real form");
    }
  }
  for (const auto& y : b1) {
    if (!b.contains(y)) throw InputError("fubini: B1 element is not in B");
  }
  const RealSubspace a1_space = span_or_zero(a1, na, false);
  const RealSubspace b1_space = span_or_zero(b1, nb, true);

  std::vector<LinearMap> right_slices;
  for (const auto& f : dual_functionals(real_a)) {
    right_slices.push_back(slice_right(f, na, nb));
  }
  std::vector<LinearMap> left_slices;
  if (psi_field == ScalarField::Real) {
    for (const auto& f : real_b) {
      left_slices.push_back(
          slice_left({f.adjoint(), true}, real_a, nb));
    }
  } else {
    for (const auto& g : b.span()) {
      left_slices.push_back(slice_left({g.adjoint(), false}, real_a, nb));
    }
  }

  const auto elements = ambient.elements();
  const Eigen::Index rows =
      static_cast<Eigen::Index>(right_slices.size()) * 2 * nb * nb +
      static_cast<Eigen::Index>(left_slices.size()) * 2 * na * na;
  RMat constraints(rows, ambient.dim());
  for (Eigen::Index i = 0; i < ambient.dim(); ++i) {
    const CMat& t = elements[static_cast<std::size_t>(i)];
    Eigen::Index offset = 0;
    for (const auto& r : right_slices) {
      const RVec res = membership_residual(b1_space, r.apply(t));
      constraints.block(offset, i, res.size(), 1) = res;
      offset += res.size();
    }
    for (const auto& l : left_slices) {
      const RVec res = membership_residual(a1_space, l.apply(t));
      constraints.block(offset, i, res.size(), 1) = res;
      offset += res.size();
    }
  }
  const RMat kernel = null_space(constraints);
  const RMat image = ambient.basis() * kernel;
  RealSubspace space(na * nb, na * nb, orthonormal_columns(image));

  RealSubspace product =
      tensor_span(a1_space.elements(), b1_space.elements(), na, nb);
  SubspaceComparison cmp = compare_subspaces(space, product);
  return {std::move(space), std::move(product), cmp, psi_field};
}

IdealPresentation::IdealPresentation(StarAlgebra b,
                                     std::vector<std::size_t> ideal_blocks)
    : b_(std::move(b)), blocks_(std::move(ideal_blocks)) {
  const auto& sizes = b_.blocks();
  if (sizes.empty()) {
    throw InputError("ideal presentation: B has no block structure");
  }
  std::set<std::size_t> seen;
  for (auto idx : blocks_) {
    if (idx >= sizes.size()) {
      throw InputError("ideal presentation: block index " +
                       std::to_string(idx) + " out of range");
    }
    if (!seen.insert(idx).second) {
      throw InputError("ideal presentation: duplicate block index");
    }
  }
  const Eigen::Index n = b_.n();
  projector_ = CMat::Identity(n, n);
  Eigen::Index offset = 0;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    const Eigen::Index s = sizes[k];
    if (seen.count(k)) {
      for (Eigen::Index j = 0; j < s; ++j) {
        projector_(offset + j, offset + j) = 0.0;
        for (Eigen::Index l = 0; l < s; ++l) {
          ideal_span_.push_back(matrix_unit(n, offset + j, offset + l));
        }
      }
    }
    offset += s;
  }
}

CMat IdealPresentation::quotient(const CMat& x) const {
  return projector_ * x * projector_;
}

double IdealPresentation::ideal_residual() const {
  const RealSubspace ideal = span_or_zero(ideal_span_, b_.n(), true);
  double worst = 0.0;
  for (const auto& x : ideal_span_) {
    worst = std::max(worst, op_norm(quotient(x)));
    for (const auto& y : b_.space().elements()) {
      worst = std::max(worst, ideal.residual(y * x));
      worst = std::max(worst, ideal.residual(x * y));
    }
  }
  return worst;
}

CMat tensor_quotient(const IdealPresentation& ideal, Eigen::Index n_left,
                     const CMat& x) {
  const CMat p = kron(CMat::Identity(n_left, n_left), ideal.quotient_projector());
  return p * x * p;
}

RealSubspace tensor_quotient_kernel(const IdealPresentation& ideal,
                                    Eigen::Index n_left,
                                    const RealSubspace& domain) {
  const auto elements = domain.elements();
  const Eigen::Index n = domain.rows();
  RMat images(2 * n * n, domain.dim());
  for (Eigen::Index i = 0; i < domain.dim(); ++i) {
    images.col(i) = realify(
        tensor_quotient(ideal, n_left, elements[static_cast<std::size_t>(i)]));
  }
  const RMat kernel = null_space(images);
  return RealSubspace(domain.rows(), domain.cols(),
                      orthonormal_columns(domain.basis() * kernel));
}

ExactnessReport exactness_check(const StarAlgebra& a,
                                const AntiAutomorphism& real_form,
                                const IdealPresentation& ideal,
                                double angle_tol) {
  ExactnessReport report;
  report.ideal_residual = ideal.ideal_residual();
  if (report.ideal_residual > 1e-9) {
    throw InputError("exactness_check: presentation is not an ideal");
  }
  const Eigen::Index na = a.n();
  const Eigen::Index nb = ideal.algebra().n();
  const auto real_a = a.real_form(real_form).elements();
  const auto complex_a = a.space().elements();
  const auto b_basis = ideal.algebra().space().elements();
  const auto i_basis = span_or_zero(ideal.ideal_span(), nb, true).elements();

  const RealSubspace real_tensor = tensor_span(real_a, b_basis, na, nb);
  const RealSubspace complex_tensor = tensor_span(complex_a, b_basis, na, nb);

  const RealSubspace real_kernel =
      tensor_quotient_kernel(ideal, na, real_tensor);
  const RealSubspace complex_kernel =
      tensor_quotient_kernel(ideal, na, complex_tensor);

  report.real = to_kernel_comparison(compare_subspaces(
      real_kernel, tensor_span(real_a, i_basis, na, nb), angle_tol));
  report.complex = to_kernel_comparison(compare_subspaces(
      complex_kernel, tensor_span(complex_a, i_basis, na, nb), angle_tol));

  const FubiniResult f =
      fubini(real_a, ideal.ideal_span(), a, real_form, ideal.algebra());
  report.fubini = to_kernel_comparison(
      compare_subspaces(f.space, tensor_span(real_a, i_basis, na, nb),
                        angle_tol));

  std::vector<CMat> imag_a;
  for (const auto& x : real_a) imag_a.push_back(kI * x);
  const RealSubspace summed =
      real_tensor.sum(tensor_span(imag_a, b_basis, na, nb));
  report.decomposition = to_kernel_comparison(
      compare_subspaces(summed, complex_tensor, angle_tol));
  return report;
}

TensorDecomposition decompose_tensor(const CMat& x, const TensorAlgebra& t,
                                     const AntiAutomorphism& real_form) {
  if (real_form.dim() != t.left().n()) {
    throw InputError("decompose_tensor: antiautomorphism dimension mismatch");
  }
  if (!t.space().contains(x)) {
    throw InputError("decompose_tensor: x is not in the tensor span");
  }
  const AntiAutomorphism joint = real_form.tensor_transpose(t.right().n());
  const auto [r, s] = real_decompose(joint, x);
  return {r, kI * s};
}

}  // namespace starlift
