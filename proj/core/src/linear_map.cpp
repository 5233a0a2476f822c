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


#include "starlift/linear_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "starlift/random.hpp"
#include "starlift/subspace.hpp"

namespace starlift {

namespace {

constexpr Complex kI(0.0, 1.0);

std::string dims(Eigen::Index r, Eigen::Index c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

const char* to_string(Linearity l) {
  return l == Linearity::Complex ? "C" : "R";
}

LinearMap::LinearMap(Eigen::Index dom, Eigen::Index cod, Linearity linearity,
                     std::vector<CMat> images)
    : dom_(dom), cod_(cod), linearity_(linearity), images_(std::move(images)) {
  if (dom_ <= 0 || cod_ <= 0) {
    throw InputError("LinearMap: dimensions must be positive");
  }
  const std::size_t expected = basis_size(dom_, linearity_);
  if (images_.size() != expected) {
    throw InputError("LinearMap: expected " + std::to_string(expected) +
                     " images, got " + std::to_string(images_.size()));
  }
  for (const auto& img : images_) {
    if (img.rows() != cod_ || img.cols() != cod_) {
      throw InputError("LinearMap: image has shape " +
                       dims(img.rows(), img.cols()) + ", expected " +
                       dims(cod_, cod_));
    }
  }
}

std::size_t LinearMap::basis_size(Eigen::Index dom, Linearity linearity) {
  const auto n2 = static_cast<std::size_t>(dom * dom);
  return linearity == Linearity::Complex ? n2 : 2 * n2;
}

CMat LinearMap::basis_element(Eigen::Index dom, Linearity linearity,
                              std::size_t index) {
  const auto n2 = static_cast<std::size_t>(dom * dom);
  if (index >= basis_size(dom, linearity)) {
    throw InputError("LinearMap: basis index out of range");
  }
  const std::size_t unit = index % n2;
  CMat e = matrix_unit(dom, static_cast<Eigen::Index>(unit) / dom,
                       static_cast<Eigen::Index>(unit) % dom);
  return index < n2 ? e : CMat(kI * e);
}

LinearMap LinearMap::from_function(Eigen::Index dom, Eigen::Index cod,
                                   Linearity linearity, const Function& f) {
  std::vector<CMat> images;
  const std::size_t count = basis_size(dom, linearity);
  images.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    images.push_back(f(basis_element(dom, linearity, i)));
  }
  return LinearMap(dom, cod, linearity, std::move(images));
}

LinearMap LinearMap::identity(Eigen::Index n) {
  return from_function(n, n, Linearity::Complex,
                       [](const CMat& x) { return x; });
}

LinearMap LinearMap::zero(Eigen::Index dom, Eigen::Index cod,
                          Linearity linearity) {
  return LinearMap(dom, cod, linearity,
                   std::vector<CMat>(basis_size(dom, linearity),
                                     CMat::Zero(cod, cod)));
}

LinearMap LinearMap::transpose(Eigen::Index n) {
  return from_function(n, n, Linearity::Complex,
                       [](const CMat& x) -> CMat { return x.transpose(); });
}

LinearMap LinearMap::conjugation(const CMat& v) {
  return from_function(v.rows(), v.cols(), Linearity::Complex,
                       [&v](const CMat& x) -> CMat {
                         return v.adjoint() * x * v;
                       });
}

Field LinearMap::cod_field() const {
  for (const auto& img : images_) {
    if (!is_real(img)) return Field::Complex;
  }
  return Field::Real;
}

CMat LinearMap::apply(const CMat& x) const {
  if (x.rows() != dom_ || x.cols() != dom_) {
    throw InputError("LinearMap::apply: input " + dims(x.rows(), x.cols()) +
                     ", expected " + dims(dom_, dom_));
  }
  CMat out = CMat::Zero(cod_, cod_);
  const std::size_t n2 = static_cast<std::size_t>(dom_ * dom_);
  for (Eigen::Index j = 0; j < dom_; ++j) {
    for (Eigen::Index l = 0; l < dom_; ++l) {
      const auto idx = static_cast<std::size_t>(j * dom_ + l);
      const Complex c = x(j, l);
      if (linearity_ == Linearity::Complex) {
        if (c != 0.0) out += c * images_[idx];
      } else {
        if (c.real() != 0.0) out += c.real() * images_[idx];
        if (c.imag() != 0.0) out += c.imag() * images_[n2 + idx];
      }
    }
  }
  return out;
}

CMat LinearMap::apply_amplified(const CMat& x, Eigen::Index k) const {
  if (x.rows() != k * dom_ || x.cols() != k * dom_) {
    throw InputError("apply_amplified: input " + dims(x.rows(), x.cols()) +
                     ", expected " + dims(k * dom_, k * dom_));
  }
  CMat out(k * cod_, k * cod_);
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b < k; ++b) {
      out.block(a * cod_, b * cod_, cod_, cod_) =
          apply(x.block(a * dom_, b * dom_, dom_, dom_));
    }
  }
  return out;
}

LinearMap LinearMap::scaled(double factor) const {
  std::vector<CMat> images;
  images.reserve(images_.size());
  for (const auto& img : images_) images.push_back(factor * img);
  return LinearMap(dom_, cod_, linearity_, std::move(images));
}

double LinearMap::max_difference(const LinearMap& other) const {
  if (other.dom_ != dom_ || other.cod_ != cod_) {
    throw InputError("max_difference: dimension mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < basis_size(dom_, Linearity::Real); ++i) {
    const CMat e = basis_element(dom_, Linearity::Real, i);
    worst = std::max(worst, max_abs_diff(apply(e), other.apply(e)));
  }
  return worst;
}

ChoiMatrix choi(const LinearMap& phi) {
  if (phi.linearity() != Linearity::Complex) {
    throw InputError(
        "choi: map is only real-linear; use cp_defect_real or complexify");
  }
  const Eigen::Index n = phi.dom_dim();
  const Eigen::Index m = phi.cod_dim();
  CMat value = CMat::Zero(n * m, n * m);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index l = 0; l < n; ++l) {
      value.block(j * m, l * m, m, m) =
          phi.images()[static_cast<std::size_t>(j * n + l)];
    }
  }
  return {std::move(value)};
}

double cp_defect(const LinearMap& phi, double tol) {
  return positivity_defect(choi(phi).value, tol);
}

RealCpReport cp_defect_real(const LinearMap& phi, Eigen::Index level,
                            const RealCpOptions& options) {
  if (level < 1) throw InputError("cp_defect_real: level must be >= 1");
  const Eigen::Index n = phi.dom_dim();
  const Eigen::Index size = level * n;
  if (options.real_form && options.real_form->dim() != n) {
    throw InputError("cp_defect_real: real form dimension mismatch");
  }
  std::optional<AntiAutomorphism> amplified_form;
  if (options.real_form) amplified_form = options.real_form->amplify(level);

  RealCpReport report;
  report.level = level;
  report.defect = std::numeric_limits<double>::infinity();

  const auto evaluate = [&](const CMat& p) {
    const CMat image = phi.apply_amplified(p, level);
    const double d = positivity_defect(image, options.tol);
    ++report.evaluated;
    if (d < report.defect) {
      report.defect = d;
      report.witness = p;
      report.witness_image = image;
    }
  };

  // Maximally-entangled-type probe: its image at level n is the Choi matrix.
  if (!options.real_form || options.real_form->is_transpose()) {
    CMat omega = CMat::Zero(size, size);
    for (Eigen::Index j = 0; j < std::min(level, n); ++j)
      for (Eigen::Index l = 0; l < std::min(level, n); ++l)
        omega(j * n + j, l * n + l) = 1.0;
    evaluate(omega);
  }
  for (const auto& p : options.probes) {
    if (p.rows() != size || p.cols() != size) {
      throw InputError("cp_defect_real: probe has wrong size");
    }
    evaluate(p);
  }

  Rng rng(options.seed);
  for (std::size_t s = 0; s < options.samples; ++s) {
    CMat c = rng.complex_gaussian(size, size);
    if (amplified_form) c = real_decompose(*amplified_form, c).r;
    CMat p = c.adjoint() * c;
    const double norm = op_norm(p);
    if (norm > 0.0) p /= norm;
    evaluate(p);

    CMat x = rng.complex_gaussian(n, n);
    if (options.real_form) x = real_decompose(*options.real_form, x).r;
    report.self_adjoint_defect =
        std::max(report.self_adjoint_defect,
                 op_norm(phi.apply(x).adjoint() - phi.apply(x.adjoint())) /
                     std::max(1.0, op_norm(x)));
  }
  return report;
}

LinearMap complexify(const LinearMap& phi, const AntiAutomorphism& real_form) {
  const Eigen::Index n = phi.dom_dim();
  if (real_form.dim() != n) {
    throw InputError("complexify: real form dimension mismatch");
  }
  return LinearMap::from_function(
      n, phi.cod_dim(), Linearity::Complex, [&](const CMat& x) -> CMat {
        const auto [r, s] = real_decompose(real_form, x);
        return phi.apply(r) + kI * phi.apply(s);
      });
}

LinearMap complexify(const AntiAutomorphism& real_form,
                     const std::vector<CMat>& basis,
                     const std::vector<CMat>& images, double tol) {
  if (basis.empty() || basis.size() != images.size()) {
    throw InputError("complexify: basis and images must be nonempty and match");
  }
  const Eigen::Index n = real_form.dim();
  const Eigen::Index cod = images.front().rows();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].rows() != n || basis[i].cols() != n) {
      throw InputError("complexify: basis element has wrong shape");
    }
    if (!in_real_form(real_form, basis[i], tol)) {
      throw InputError("complexify: basis element " + std::to_string(i) +
                       " is not in the real form");
    }
  }
  // Coordinates of r and s in the supplied basis via least squares over R.
  RMat system(2 * n * n, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    system.col(static_cast<Eigen::Index>(i)) = realify(basis[i]);
  }
  const Eigen::CompleteOrthogonalDecomposition<RMat> solver(system);
  if (solver.rank() != n * n) {
    throw InputError("complexify: basis does not span the real form (rank " +
                     std::to_string(solver.rank()) + ", need " +
                     std::to_string(n * n) + ")");
  }
  const auto evaluate_real = [&](const CMat& a) -> CMat {
    const RVec coeff = solver.solve(realify(a));
    CMat out = CMat::Zero(cod, cod);
    for (std::size_t i = 0; i < images.size(); ++i) {
      out += coeff(static_cast<Eigen::Index>(i)) * images[i];
    }
    return out;
  };
  return LinearMap::from_function(
      n, cod, Linearity::Complex, [&](const CMat& x) -> CMat {
        const auto [r, s] = real_decompose(real_form, x);
        return evaluate_real(r) + kI * evaluate_real(s);
      });
}

LinearMap amplify(const LinearMap& phi, Eigen::Index k) {
  if (k < 1) throw InputError("amplify: k must be >= 1");
  return LinearMap::from_function(
      k * phi.dom_dim(), k * phi.cod_dim(), phi.linearity(),
      [&](const CMat& x) { return phi.apply_amplified(x, k); });
}

LinearMap compress(const LinearMap& phi, const CMat& b) {
  if (b.rows() != phi.cod_dim()) {
    throw InputError("compress: b has " + std::to_string(b.rows()) +
                     " rows, map codomain is " +
                     std::to_string(phi.cod_dim()));
  }
  return LinearMap::from_function(
      phi.dom_dim(), b.cols(), phi.linearity(),
      [&](const CMat& x) -> CMat { return b.adjoint() * phi.apply(x) * b; });
}

LinearMap compose(const LinearMap& psi, const LinearMap& phi) {
  if (psi.dom_dim() != phi.cod_dim()) {
    throw InputError("compose: codomain " + std::to_string(phi.cod_dim()) +
                     " does not match domain " +
                     std::to_string(psi.dom_dim()));
  }
  const Linearity lin = (psi.linearity() == Linearity::Complex &&
                         phi.linearity() == Linearity::Complex)
                            ? Linearity::Complex
                            : Linearity::Real;
  return LinearMap::from_function(
      phi.dom_dim(), psi.cod_dim(), lin,
      [&](const CMat& x) { return psi.apply(phi.apply(x)); });
}

}  // namespace starlift
