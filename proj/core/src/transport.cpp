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


#include "starlift/transport.hpp"

#include <cmath>
#include <cstdlib>

namespace starlift {

namespace {

constexpr Complex kI(0.0, 1.0);

void require_scalar(const CMat& x, const char* what) {
  if (x.rows() != 1 || x.cols() != 1) {
    throw InputError(std::string(what) +
                     ": defined for scalars only; got a " +
                     std::to_string(x.rows()) + "x" + std::to_string(x.cols()) +
                     " matrix");
  }
}

template <typename Block>
RMat entrywise_2x2(const CMat& x, Block block) {
  RMat out = RMat::Zero(2 * x.rows(), 2 * x.cols());
  for (Eigen::Index j = 0; j < x.rows(); ++j)
    for (Eigen::Index l = 0; l < x.cols(); ++l)
      out.block<2, 2>(2 * j, 2 * l) = block(x(j, l));
  return out;
}

}  // namespace

ThetaScale ThetaScale::fixed(double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InputError("theta fixed scale must be a positive finite number");
  }
  return {Mode::FixedLinear, value};
}

ThetaScale parse_theta_mode(const std::string& text) {
  if (text == "paper") return ThetaScale::normalized();
  const std::string prefix = "fixed:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string number = text.substr(prefix.size());
    char* end = nullptr;
    const double v = std::strtod(number.c_str(), &end);
    if (number.empty() || end != number.c_str() + number.size()) {
      throw InputError("theta mode: cannot parse scale '" + number + "'");
    }
    return ThetaScale::fixed(v);
  }
  throw InputError("theta mode must be 'paper' or 'fixed:<value>', got '" +
                   text + "'");
}

std::string to_string(const ThetaScale& scale) {
  if (!scale.linear()) return "paper";
  char buf[64];
  std::snprintf(buf, sizeof buf, "fixed:%.17g", scale.fixed_value);
  return buf;
}

RMat sigma_k(const CMat& x) {
  return entrywise_2x2(x, [](Complex z) {
    Eigen::Matrix2d b;
    b << z.real(), z.imag(), -z.imag(), z.real();
    return b;
  });
}

CMat rho_k(const CMat& m) {
  if (m.rows() % 2 != 0 || m.cols() % 2 != 0) {
    throw InputError("rho_k: dimensions must be even, got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  CMat out(m.rows() / 2, m.cols() / 2);
  for (Eigen::Index j = 0; j < out.rows(); ++j) {
    for (Eigen::Index l = 0; l < out.cols(); ++l) {
      const Complex a = m(2 * j, 2 * l), b = m(2 * j, 2 * l + 1);
      const Complex c = m(2 * j + 1, 2 * l), d = m(2 * j + 1, 2 * l + 1);
      out(j, l) = 0.5 * (a + d) + 0.5 * kI * (b - c);
    }
  }
  return out;
}

double theta_normalizer(const CMat& x) {
  double best = 0.0;
  for (Eigen::Index l = 0; l < x.cols(); ++l) {
    double col = 0.0;
    for (Eigen::Index j = 0; j < x.rows(); ++j)
      col += std::abs(x(j, l).real()) + std::abs(x(j, l).imag());
    best = std::max(best, col);
  }
  return best;
}

RMat theta_k(const CMat& x, const ThetaScale& scale) {
  const double factor = scale.linear() ? scale.fixed_value
                                       : 1.0 / (theta_normalizer(x) + 1.0);
  return factor * sigma_k(x);
}

RMat eta_k(const CMat& x) {
  return entrywise_2x2(x, [](Complex z) {
    Eigen::Matrix2d b;
    b << z.real(), 0.0, 0.0, z.imag();
    return b;
  });
}

RMat eta1_k(const CMat& x) {
  return entrywise_2x2(x, [](Complex z) {
    Eigen::Matrix2d b;
    b << z.real(), 0.0, 0.0, std::abs(z.imag());
    return b;
  });
}

double upsilon(Complex z, double scale) {
  return scale * (z.real() + z.imag());
}

RMat eta1(Complex z) {
  CMat x(1, 1);
  x(0, 0) = z;
  return eta1_k(x);
}

double upsilon1(Complex z, double scale) {
  return scale * (z.real() + std::abs(z.imag()));
}

RMat eta1(const CMat& x) {
  require_scalar(x, "eta1");
  return eta1(x(0, 0));
}

double upsilon1(const CMat& x, double scale) {
  require_scalar(x, "upsilon1");
  return upsilon1(x(0, 0), scale);
}

CMat rho_isometry(Eigen::Index k) {
  CMat w = CMat::Zero(2 * k, k);
  const double r = 1.0 / std::sqrt(2.0);
  for (Eigen::Index j = 0; j < k; ++j) {
    w(2 * j, j) = r;
    w(2 * j + 1, j) = kI * r;
  }
  return w;
}

LinearMap sigma_map(Eigen::Index k) {
  return LinearMap::from_function(
      k, 2 * k, Linearity::Real,
      [](const CMat& x) -> CMat { return sigma_k(x).cast<Complex>(); });
}

LinearMap rho_map(Eigen::Index k) {
  return LinearMap::conjugation(rho_isometry(k));
}

LinearMap theta_map(Eigen::Index k, const ThetaScale& scale) {
  if (!scale.linear()) {
    throw InputError("theta_map: the normalizing theta is not linear");
  }
  return sigma_map(k).scaled(scale.fixed_value);
}

LinearMap eta_map(Eigen::Index k) {
  return LinearMap::from_function(
      k, 2 * k, Linearity::Real,
      [](const CMat& x) -> CMat { return eta_k(x).cast<Complex>(); });
}

LinearMap upsilon_map(double scale) {
  return LinearMap::from_function(1, 1, Linearity::Real,
                                  [scale](const CMat& x) -> CMat {
                                    CMat out(1, 1);
                                    out(0, 0) = upsilon(x(0, 0), scale);
                                    return out;
                                  });
}

TransportedFactorization transport_factorization(const LinearMap& phi,
                                                 const LinearMap& psi) {
  if (psi.dom_dim() != phi.cod_dim()) {
    throw InputError("transport_factorization: phi maps into M_" +
                     std::to_string(phi.cod_dim()) + " but psi starts at M_" +
                     std::to_string(psi.dom_dim()));
  }
  const Eigen::Index n = phi.cod_dim();
  LinearMap phi_prime = compose(sigma_map(n), phi);
  LinearMap psi_prime = compose(psi, rho_map(n));
  const double residual =
      compose(psi_prime, phi_prime).max_difference(compose(psi, phi));
  return {std::move(phi_prime), std::move(psi_prime), residual};
}

RealifiedMap realify_map(const LinearMap& phi, const AntiAutomorphism& real_form,
                         const ThetaScale& scale) {
  if (phi.linearity() != Linearity::Complex) {
    throw InputError("realify_map: phi must be complex-linear");
  }
  if (real_form.dim() != phi.dom_dim()) {
    throw InputError("realify_map: real form dimension mismatch");
  }
  RealifiedMap out;
  out.dom = phi.dom_dim();
  out.cod = 2 * phi.cod_dim();
  out.scale = scale;
  out.nonlinear = !scale.linear();
  out.evaluate = [phi, real_form, scale](const CMat& x) -> CMat {
    return theta_k(phi.apply(conj_phi(real_form, x)), scale).cast<Complex>();
  };
  if (scale.linear()) {
    out.linear = LinearMap::from_function(out.dom, out.cod, Linearity::Real,
                                          out.evaluate);
  }
  return out;
}

}  // namespace starlift
