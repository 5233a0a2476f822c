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


#include "starlift/certify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "starlift/random.hpp"

namespace starlift {

namespace {

constexpr Complex kI(0.0, 1.0);

using Evaluator = std::function<CMat(const CMat&)>;
using Norm = std::function<double(const CMat&)>;

double real_col1_of(const CMat& x) {
  if (!is_real(x, 1e-12)) {
    throw InputError("real_col1 norm mode requires real-valued images");
  }
  return col_norm1(RMat(x.real()));
}

struct NormPair {
  Norm source;
  Norm target;
};

NormPair norms_for(NormMode mode, const std::optional<AntiAutomorphism>& phi) {
  switch (mode) {
    case NormMode::ComplexOp:
      return {op_norm, op_norm};
    case NormMode::RealCol1:
      return {op_norm, real_col1_of};
    case NormMode::PhiSplit:
      if (!phi) {
        throw InputError(
            "phi_split norm mode requires the algebra's antiautomorphism");
      }
      return {[p = *phi](const CMat& x) { return split_norm(p, x); },
              entrywise_split_norm};
  }
  throw InputError("unknown norm mode");
}

// Fills mult/norm defects with worst-case witnesses. Strict comparisons keep
// the first worst element in F's order.
void measure_qd(const FiniteSubset& F, const Evaluator& eval,
                const NormPair& norms, DefectReport& report) {
  std::vector<CMat> images;
  images.reserve(F.size());
  for (const auto& a : F.elements) images.push_back(eval(a));

  DefectWitness mult{"mult", 0, 0, 0.0};
  DefectWitness norm{"norm", 0, std::nullopt, 0.0};
  for (std::size_t i = 0; i < F.size(); ++i) {
    const double nd =
        std::abs(norms.target(images[i]) - norms.source(F.elements[i]));
    if (nd > norm.value) norm = {"norm", i, std::nullopt, nd};
    for (std::size_t j = 0; j < F.size(); ++j) {
      const CMat d = eval(F.elements[i] * F.elements[j]) - images[i] * images[j];
      const double md = norms.target(d);
      if (md > mult.value) mult = {"mult", i, j, md};
    }
  }
  report.max_mult_defect = mult.value;
  report.max_norm_defect = norm.value;
  report.witnesses.push_back(mult);
  report.witnesses.push_back(norm);
}

void record_check(std::vector<BoundCheck>& checks, const std::string& name,
                  double lhs, double rhs) {
  // Keep the tightest (largest lhs - rhs) instance per name.
  for (auto& c : checks) {
    if (c.name == name) {
      const bool holds = c.holds && lhs <= rhs;
      if (lhs - rhs > c.lhs - c.rhs) {
        c.lhs = lhs;
        c.rhs = rhs;
      }
      c.holds = holds;
      return;
    }
  }
  checks.push_back({name, lhs, rhs, lhs <= rhs});
}

}  // namespace

const char* to_string(NormMode mode) {
  switch (mode) {
    case NormMode::ComplexOp:
      return "complex_op";
    case NormMode::RealCol1:
      return "real_col1";
    case NormMode::PhiSplit:
      return "phi_split";
  }
  return "?";
}

NormMode parse_norm_mode(const std::string& text) {
  if (text == "complex_op") return NormMode::ComplexOp;
  if (text == "real_col1") return NormMode::RealCol1;
  if (text == "phi_split") return NormMode::PhiSplit;
  throw InputError("unknown norm mode '" + text +
                   "' (expected complex_op, real_col1 or phi_split)");
}

double split_norm(const AntiAutomorphism& phi, const CMat& x) {
  const auto [r, s] = real_decompose(phi, x);
  return op_norm(r) + op_norm(s);
}

double entrywise_split_norm(const CMat& x) {
  return op_norm(x.real().cast<Complex>()) + op_norm(x.imag().cast<Complex>());
}

FiniteSubset::FiniteSubset(std::vector<CMat> elems,
                           std::vector<std::string> names)
    : elements(std::move(elems)), labels(std::move(names)) {
  if (elements.empty()) throw InputError("finite subset must be nonempty");
  for (const auto& e : elements) {
    if (e.rows() != elements.front().rows() ||
        e.cols() != elements.front().cols()) {
      throw InputError("finite subset elements have mixed dimensions");
    }
  }
  if (!labels.empty() && labels.size() != elements.size()) {
    throw InputError("finite subset labels do not match elements");
  }
}

std::string FiniteSubset::label(std::size_t i) const {
  return labels.empty() ? "F[" + std::to_string(i) + "]" : labels.at(i);
}

double QDCertificate::unitality_defect() const {
  const Eigen::Index n = algebra.n();
  return op_norm(map.apply(CMat::Identity(n, n)) -
                 CMat::Identity(map.cod_dim(), map.cod_dim()));
}

void QDCertificate::validate(double tol) const {
  if (map.dom_dim() != algebra.n()) {
    throw InputError("certificate map domain M_" +
                     std::to_string(map.dom_dim()) +
                     " does not match algebra dimension " +
                     std::to_string(algebra.n()));
  }
  if (!(epsilon > 0.0)) throw InputError("certificate epsilon must be > 0");
  if (real_form && real_form->dim() != algebra.n()) {
    throw InputError("certificate antiautomorphism dimension mismatch");
  }
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (!algebra.contains(F.elements[i], tol)) {
      throw InputError("certificate element " + F.label(i) +
                       " is not in the algebra");
    }
  }
  if (algebra.unital() && unitality_defect() > tol) {
    throw InputError("certificate map is not unital (||phi(1) - 1|| = " +
                     std::to_string(unitality_defect()) + ")");
  }
}

void DefectReport::finalize() {
  pass = max_mult_defect < epsilon && max_norm_defect < epsilon;
  if (max_trace_defect) pass = pass && *max_trace_defect < epsilon;
  if (max_factorization_defect) {
    pass = pass && *max_factorization_defect < epsilon;
  }
}

bool DefectReport::checks_hold() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const BoundCheck& c) { return c.holds; });
}

DefectReport qd_verify(const QDCertificate& cert) {
  cert.validate();
  DefectReport report;
  report.epsilon = cert.epsilon;
  measure_qd(cert.F, [&](const CMat& x) { return cert.map.apply(x); },
             norms_for(cert.norm_mode, cert.real_form), report);
  report.finalize();
  return report;
}

QDTransport qd_complexify(const QDCertificate& real_cert,
                          const std::optional<std::vector<CMat>>& complex_set,
                          double slack) {
  if (!real_cert.real_form) {
    throw InputError("qd_complexify: certificate has no antiautomorphism");
  }
  const AntiAutomorphism& phi_form = *real_cert.real_form;
  const LinearMap& phi = real_cert.map;
  const Eigen::Index n = real_cert.algebra.n();

  for (std::size_t i = 0; i < real_cert.F.size(); ++i) {
    if (!in_real_form(phi_form, real_cert.F.elements[i])) {
      throw InputError("qd_complexify: " + real_cert.F.label(i) +
                       " is not in the real form");
    }
  }

  // Pairs (a_j, b_j) with c_j = a_j + i b_j.
  std::vector<CMat> re, im, cs;
  if (complex_set) {
    for (const auto& c : *complex_set) {
      const auto [r, s] = real_decompose(phi_form, c);
      re.push_back(r);
      im.push_back(s);
      cs.push_back(c);
    }
  } else {
    const auto& f = real_cert.F.elements;
    for (std::size_t j = 0; j < f.size(); j += 2) {
      re.push_back(f[j]);
      im.push_back(j + 1 < f.size() ? f[j + 1] : CMat::Zero(n, n));
      cs.push_back(re.back() + kI * im.back());
    }
  }

  LinearMap phi_c = complexify(phi, phi_form);
  QDCertificate complex_cert{real_cert.algebra, phi_form, FiniteSubset(cs),
                             phi_c, real_cert.epsilon, NormMode::PhiSplit};
  DefectReport report = qd_verify(complex_cert);

  const auto real_defect = [&](const CMat& x, const CMat& y) {
    return op_norm(phi.apply(x * y) - phi.apply(x) * phi.apply(y));
  };
  const auto real_norm_defect = [&](const CMat& x) {
    return std::abs(op_norm(phi.apply(x)) - op_norm(x));
  };

  double worst_op = 0.0;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    for (std::size_t l = 0; l < cs.size(); ++l) {
      const double bound = real_defect(re[k], re[l]) +
                           real_defect(im[k], im[l]) +
                           real_defect(im[k], re[l]) +
                           real_defect(re[k], im[l]);
      const CMat d = phi_c.apply(cs[k] * cs[l]) -
                     phi_c.apply(cs[k]) * phi_c.apply(cs[l]);
      const double op = op_norm(d);
      worst_op = std::max(worst_op, op);
      record_check(report.checks, "mult_op_le_four_real_defects", op,
                   bound + slack);
      record_check(report.checks, "mult_split_le_four_real_defects",
                   entrywise_split_norm(d), bound + slack);
    }
    const double split_defect =
        std::abs(entrywise_split_norm(phi_c.apply(cs[k])) -
                 split_norm(phi_form, cs[k]));
    record_check(report.checks, "split_norm_le_two_real_defects", split_defect,
                 real_norm_defect(re[k]) + real_norm_defect(im[k]) + slack);
  }
  report.witnesses.push_back({"mult_op", 0, std::nullopt, worst_op});
  return {std::move(complex_cert), std::move(report)};
}

double fixed_theta_scale(const LinearMap& phi, const FiniteSubset& F) {
  double worst = 0.0;
  for (const auto& a : F.elements) {
    worst = std::max(worst, theta_normalizer(phi.apply(a)));
    for (const auto& b : F.elements) {
      worst = std::max(worst, theta_normalizer(phi.apply(a * b)));
    }
  }
  return 1.0 / (worst + 1.0);
}

QDTransport qd_realify(const QDCertificate& complex_cert,
                       const AntiAutomorphism& real_form,
                       const ThetaScale& scale, double slack) {
  const LinearMap& phi = complex_cert.map;
  const RealifiedMap phi_prime = realify_map(phi, real_form, scale);

  std::vector<CMat> real_elements;
  for (const auto& a : complex_cert.F.elements) {
    if (in_real_form(real_form, a)) {
      real_elements.push_back(a);
      continue;
    }
    const auto [r, s] = real_decompose(real_form, a);
    if (op_norm(r) > 0.0) real_elements.push_back(r);
    if (op_norm(s) > 0.0) real_elements.push_back(s);
  }
  if (real_elements.empty()) {
    real_elements.push_back(CMat::Zero(real_form.dim(), real_form.dim()));
  }
  FiniteSubset real_F(real_elements);

  DefectReport report;
  report.epsilon = complex_cert.epsilon;
  measure_qd(real_F, phi_prime.evaluate,
             norms_for(NormMode::RealCol1, real_form), report);

  if (phi_prime.nonlinear) {
    report.flags.push_back(
        "nonlinear theta: homomorphism step not applicable");
  } else {
    const double s = scale.fixed_value;
    for (const auto& a : real_F.elements) {
      for (const auto& b : real_F.elements) {
        const CMat pa = phi.apply(a), pb = phi.apply(b);
        const CMat d = phi.apply(a * b) - pa * pb;
        const double lhs = real_col1_of(phi_prime(a * b) -
                                        phi_prime(a) * phi_prime(b));
        const double rhs = s * theta_normalizer(d) +
                           std::abs(s - s * s) * theta_normalizer(pa * pb);
        record_check(report.checks, "realified_mult_bound", lhs, rhs + slack);
      }
    }
  }
  report.finalize();

  std::optional<QDCertificate> cert;
  if (phi_prime.linear) {
    cert = QDCertificate{complex_cert.algebra, real_form, real_F,
                         *phi_prime.linear, complex_cert.epsilon,
                         NormMode::RealCol1};
  }
  return {std::move(cert), std::move(report)};
}

namespace {

double factorization_norm(const CMat& x, NormMode mode) {
  switch (mode) {
    case NormMode::ComplexOp:
      return op_norm(x);
    case NormMode::RealCol1:
      return real_col1_of(x);
    case NormMode::PhiSplit:
      return entrywise_split_norm(x);
  }
  return op_norm(x);
}

}  // namespace

DefectReport nuclear_witness_verify(const LinearMap& phi, const LinearMap& psi,
                                    const FiniteSubset& F,
                                    const std::optional<LinearMap>& target,
                                    double epsilon, NormMode mode) {
  if (psi.dom_dim() != phi.cod_dim()) {
    throw InputError("nuclear_witness_verify: phi and psi do not chain");
  }
  const LinearMap tgt = target ? *target : LinearMap::identity(phi.dom_dim());
  if (tgt.dom_dim() != phi.dom_dim() || tgt.cod_dim() != psi.cod_dim()) {
    throw InputError("nuclear_witness_verify: target dimension mismatch");
  }
  DefectReport report;
  report.epsilon = epsilon;
  DefectWitness worst{"factorization", 0, std::nullopt, 0.0};
  for (std::size_t i = 0; i < F.size(); ++i) {
    const CMat& a = F.elements[i];
    const double d =
        factorization_norm(psi.apply(phi.apply(a)) - tgt.apply(a), mode);
    if (d > worst.value) worst = {"factorization", i, std::nullopt, d};
  }
  report.max_factorization_defect = worst.value;
  report.witnesses.push_back(worst);
  report.finalize();
  return report;
}

DefectReport weak_nuclear_verify(const LinearMap& target, const FiniteSubset& F,
                                 const std::vector<CompressionWitness>& witnesses,
                                 double epsilon) {
  DefectReport report;
  report.epsilon = epsilon;
  DefectWitness worst{"compression", 0, std::nullopt, 0.0};
  for (std::size_t w = 0; w < witnesses.size(); ++w) {
    const auto& [b, phi, psi] = witnesses[w];
    const LinearMap compressed = compress(target, b);
    const DefectReport one =
        nuclear_witness_verify(phi, psi, F, compressed, epsilon);
    if (*one.max_factorization_defect > worst.value) {
      worst = {"compression", w, one.witnesses.front().first,
               *one.max_factorization_defect};
    }
  }
  report.max_factorization_defect = worst.value;
  report.witnesses.push_back(worst);
  report.finalize();
  return report;
}

TraceWitness::TraceWitness(const StarAlgebra& algebra, CMat weight, double tol)
    : weight_(std::move(weight)) {
  if (weight_.rows() != algebra.n() || weight_.cols() != algebra.n()) {
    throw InputError("trace weight has wrong dimensions");
  }
  const auto basis = algebra.space().elements();
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      tracial_residual_ =
          std::max(tracial_residual_, std::abs((*this)(a * b) - (*this)(b * a)));
    }
  }
  if (tracial_residual_ > tol) {
    throw InputError("functional is not tracial on the algebra (residual " +
                     std::to_string(tracial_residual_) + ")");
  }
  Rng rng(0);
  positivity_defect_ = 0.0;
  for (int s = 0; s < 16; ++s) {
    CMat c = CMat::Zero(algebra.n(), algebra.n());
    for (const auto& e : basis) c += rng.normal() * e;
    const double norm = op_norm(c);
    if (norm == 0.0) continue;
    c /= norm;
    positivity_defect_ =
        std::min(positivity_defect_, (*this)(c.adjoint() * c).real());
  }
  unit_value_ = (*this)(CMat::Identity(algebra.n(), algebra.n()));
}

TraceWitness TraceWitness::normalized_trace(const StarAlgebra& algebra) {
  const Eigen::Index n = algebra.n();
  return TraceWitness(algebra, CMat::Identity(n, n) / static_cast<double>(n));
}

Complex TraceWitness::operator()(const CMat& x) const {
  return (weight_ * x).trace();
}

DefectReport trace_qd_verify(const QDCertificate& cert,
                             const TraceWitness& tau) {
  if (cert.unitality_defect() > 1e-9) {
    throw InputError("trace_qd_verify: map is not unital");
  }
  DefectReport report = qd_verify(cert);
  DefectWitness worst{"trace", 0, std::nullopt, 0.0};
  for (std::size_t i = 0; i < cert.F.size(); ++i) {
    const CMat& a = cert.F.elements[i];
    const double d = std::abs(normalized_trace(cert.map.apply(a)) - tau(a));
    if (d > worst.value) worst = {"trace", i, std::nullopt, d};
  }
  report.max_trace_defect = worst.value;
  report.witnesses.push_back(worst);
  report.finalize();
  return report;
}

TraceTransport trace_transport(const TraceWitness& tau,
                               const StarAlgebra& algebra,
                               const AntiAutomorphism& real_form, double scale,
                               const std::optional<QDCertificate>& cert,
                               const ThetaScale& theta) {
  TraceTransport out;
  out.scale = scale;
  out.real_trace = [tau, scale](const CMat& a) {
    return upsilon1(tau(a), scale);
  };

  const RealSubspace real_space = algebra.real_form(real_form);
  const auto basis = real_space.elements();
  for (const auto& a : basis) {
    out.imaginary_leak = std::max(out.imaginary_leak, std::abs(tau(a).imag()));
    for (const auto& b : basis) {
      out.tracial_residual =
          std::max(out.tracial_residual,
                   std::abs(out.real_trace(a * b) - out.real_trace(b * a)));
    }
  }
  DefectReport& report = out.report;
  if (out.imaginary_leak > 1e-9) {
    report.flags.push_back(
        "tau takes non-real values on the real form; upsilon1 pullback is not "
        "real-linear");
  }
  record_check(report.checks, "real_trace_is_tracial", out.tracial_residual,
               1e-9);

  if (!cert) {
    report.finalize();
    return out;
  }

  const LinearMap& phi = cert->map;
  const RealifiedMap phi_prime = realify_map(phi, real_form, theta);
  report.epsilon = cert->epsilon;
  const double upsilon1_norm = scale * std::sqrt(2.0);

  DefectWitness worst{"trace", 0, std::nullopt, 0.0};
  for (std::size_t i = 0; i < cert->F.size(); ++i) {
    const CMat& a0 = cert->F.elements[i];
    const CMat a = in_real_form(real_form, a0)
                       ? a0
                       : CMat(real_decompose(real_form, a0).r);
    const CMat pa = phi.apply(a);
    const double lhs = std::abs(normalized_trace(phi_prime(a)).real() -
                                out.real_trace(a));
    if (lhs > worst.value) worst = {"trace", i, std::nullopt, lhs};

    const double tr_theta = normalized_trace(theta_k(pa, theta).cast<Complex>()).real();
    const double tr_eta1 = normalized_trace(eta1_k(pa).cast<Complex>()).real();
    record_check(report.checks, "theta_trace_le_eta1_trace", tr_theta,
                 tr_eta1);

    const double step1 = std::abs(tr_eta1 - upsilon1(tau(a), scale));
    record_check(report.checks, "defect_le_eta1_defect", lhs, step1);

    const double via_upsilon = upsilon1(normalized_trace(pa), scale);
    record_check(report.checks, "eta1_trace_eq_upsilon1_trace",
                 std::abs(tr_eta1 - via_upsilon), 1e-12);

    const double step3 = std::abs(via_upsilon - upsilon1(tau(a), scale));
    const double tdef = std::abs(normalized_trace(pa) - tau(a));
    record_check(report.checks, "upsilon1_defect_le_norm_times_trace_defect",
                 step3, upsilon1_norm * tdef + 1e-12);
    record_check(report.checks, "defect_lt_upsilon1_norm_times_epsilon", lhs,
                 upsilon1_norm * cert->epsilon);
  }
  report.max_trace_defect = worst.value;
  report.witnesses.push_back(worst);
  report.finalize();
  return out;
}

// ---------------------------------------------------------------------------
// Claim audit

const char* to_string(LemmaClaim claim) {
  switch (claim) {
    case LemmaClaim::Eqtr1:
      return "eqtr1";
    case LemmaClaim::Eqtr1Scale1:
      return "eqtr1_scale1";
    case LemmaClaim::EtaCp:
      return "eta_cp";
    case LemmaClaim::UpsilonCp:
      return "upsilon_cp";
    case LemmaClaim::Eq1t2:
      return "eq1t2";
    case LemmaClaim::ThetaHomomorphism:
      return "theta_homomorphism";
    case LemmaClaim::ThetaLinearity:
      return "theta_linearity";
  }
  return "?";
}

std::vector<LemmaClaim> all_lemma_claims() {
  return {LemmaClaim::Eqtr1,     LemmaClaim::Eqtr1Scale1,
          LemmaClaim::EtaCp,     LemmaClaim::UpsilonCp,
          LemmaClaim::Eq1t2,     LemmaClaim::ThetaHomomorphism,
          LemmaClaim::ThetaLinearity};
}

LemmaClaim parse_lemma_claim(const std::string& name) {
  for (auto c : all_lemma_claims()) {
    if (name == to_string(c)) return c;
  }
  throw InputError("unknown claim '" + name + "'");
}

namespace {

CMat scalar(Complex z) {
  CMat m(1, 1);
  m(0, 0) = z;
  return m;
}

// The level-2 positive element [[1, i], [-i, 1]] over M_1 = C.
CMat level2_probe() {
  CMat p(2, 2);
  p << 1.0, kI, -kI, 1.0;
  return p;
}

AuditReport audit_eqtr1(double scale, const AuditOptions& o) {
  AuditReport r;
  Rng rng(o.seed);
  double ratio = 0.0;
  bool ratio_set = false;
  for (std::size_t s = 0; s < o.samples; ++s) {
    const Eigen::Index k = rng.integer(1, 5);
    const CMat x = rng.complex_gaussian(k, k);
    const double lhs = upsilon(normalized_trace(x), scale);
    const double rhs = normalized_trace(eta_k(x).cast<Complex>()).real();
    const double residual = std::abs(lhs - rhs);
    if (residual > r.max_residual) {
      r.max_residual = residual;
      r.witness["x"] = x;
      r.values["lhs"] = lhs;
      r.values["rhs"] = rhs;
    }
    if (!ratio_set && std::abs(rhs) > 1e-3) {
      ratio = lhs / rhs;
      ratio_set = true;
    }
  }
  r.holds = r.max_residual <= 1e-12;
  if (ratio_set) r.values["ratio"] = ratio;
  r.values["scale"] = scale;
  r.detail = r.holds ? "upsilon(tau_k(x)) = tau'_2k(eta_k(x)) on all samples"
                     : "upsilon(tau_k(x)) differs from tau'_2k(eta_k(x))";
  return r;
}

AuditReport audit_eta_cp(const AuditOptions& o) {
  AuditReport r;
  const LinearMap eta = eta_map(1);
  RealCpOptions opts;
  opts.samples = o.samples;
  opts.seed = o.seed;
  const RealCpReport level1 = cp_defect_real(eta, 1, opts);
  r.values["level1_defect"] = level1.defect;

  const CMat p = level2_probe();
  const CMat image = eta.apply_amplified(p, 2);
  const double probe_defect = positivity_defect(image);
  opts.probes = {p};
  const RealCpReport level2 = cp_defect_real(eta, 2, opts);
  r.values["level2_defect"] = probe_defect;
  r.values["level2_sampled_min"] = level2.defect;
  r.holds = level1.defect >= -1e-9 && level2.defect >= -1e-9;
  r.max_residual = -std::min(0.0, probe_defect);
  r.witness["p"] = p;
  r.witness["image"] = image;
  // Rows/cols of the imaginary-part coordinates.
  CMat sub(2, 2);
  sub << image(1, 1), image(1, 3), image(3, 1), image(3, 3);
  r.witness["imaginary_block"] = sub;
  r.detail = "eta is positive at level 1; at level 2 the image of p has an "
             "antisymmetric imaginary-part block";
  return r;
}

AuditReport audit_upsilon_cp(double scale, const AuditOptions& o) {
  AuditReport r;
  const LinearMap ups = upsilon_map(scale);
  RealCpOptions opts;
  opts.samples = o.samples;
  opts.seed = o.seed;
  const RealCpReport level1 = cp_defect_real(ups, 1, opts);
  const CMat p = level2_probe();
  const CMat image = ups.apply_amplified(p, 2);
  const double defect = positivity_defect(image);
  r.values["level1_defect"] = level1.defect;
  r.values["level2_defect"] = defect;
  r.values["self_adjoint_defect"] = op_norm(image - image.adjoint());
  r.values["scale"] = scale;
  r.holds = level1.defect >= -1e-9 && defect >= -1e-9 &&
            r.values["self_adjoint_defect"] <= 1e-9;
  r.max_residual = r.values["self_adjoint_defect"];
  r.witness["p"] = p;
  r.witness["image"] = image;
  r.detail = "level-2 amplification of upsilon does not preserve "
             "self-adjointness";
  return r;
}

AuditReport audit_eq1t2(const AuditOptions& o) {
  AuditReport r;
  const auto gap = [](const CMat& a) {
    const double lhs = normalized_trace(
        theta_k(a, ThetaScale::normalized()).cast<Complex>()).real();
    const double rhs = normalized_trace(eta1_k(a).cast<Complex>()).real();
    return std::make_pair(lhs, rhs);
  };
  std::vector<CMat> inputs;
  inputs.push_back(0.5 * matrix_unit(2, 0, 0));
  Rng rng(o.seed);
  for (std::size_t s = 0; s < o.samples; ++s) {
    const Eigen::Index k = rng.integer(1, 4);
    inputs.push_back(rng.complex_gaussian(k, k) * rng.uniform(0.01, 2.0));
  }
  r.holds = true;
  std::size_t violations = 0;
  for (const auto& a : inputs) {
    const auto [lhs, rhs] = gap(a);
    const double excess = lhs - rhs;
    if (excess > 1e-12) {
      ++violations;
      if (r.holds) {
        r.witness["a"] = a;
        r.values["lhs"] = lhs;
        r.values["rhs"] = rhs;
      }
      r.holds = false;
    }
    r.max_residual = std::max(r.max_residual, excess);
  }
  r.values["violations"] = static_cast<double>(violations);
  r.detail = "tau'(theta(a)) <= tau'(eta1(a)) checked on eps*E11 and random a";
  return r;
}

AuditReport audit_theta_homomorphism(const AuditOptions& o) {
  AuditReport r;
  Rng rng(o.seed);
  const ThetaScale norm = ThetaScale::normalized();
  std::vector<std::pair<CMat, CMat>> pairs;
  pairs.emplace_back(scalar(1.0), scalar(1.0));
  for (std::size_t s = 0; s < o.samples; ++s) {
    const Eigen::Index k = rng.integer(1, 4);
    pairs.emplace_back(rng.complex_gaussian(k, k), rng.complex_gaussian(k, k));
  }
  for (const auto& [x, y] : pairs) {
    const RMat lhs = theta_k(x * y, norm);
    const RMat rhs = theta_k(x, norm) * theta_k(y, norm);
    const double res = (lhs - rhs).cwiseAbs().maxCoeff();
    if (res > r.max_residual) {
      r.max_residual = res;
      r.witness["x"] = x;
      r.witness["y"] = y;
    }
  }
  r.holds = r.max_residual <= 1e-12;
  r.detail = "theta(xy) vs theta(x) theta(y) with the input-dependent normalizer";
  return r;
}

AuditReport audit_theta_linearity(const AuditOptions& o) {
  AuditReport r;
  Rng rng(o.seed);
  const ThetaScale norm = ThetaScale::normalized();
  r.holds = true;
  for (std::size_t s = 0; s < o.samples; ++s) {
    const Eigen::Index k = rng.integer(1, 4);
    const CMat x = rng.complex_gaussian(k, k);
    const CMat y = rng.complex_gaussian(k, k) * 3.0;
    const RMat lhs = theta_k(x + y, norm);
    const RMat rhs = theta_k(x, norm) + theta_k(y, norm);
    const double res = (lhs - rhs).cwiseAbs().maxCoeff();
    if (res > r.max_residual) {
      r.max_residual = res;
      r.witness["x"] = x;
      r.witness["y"] = y;
      r.values["normalizer_x"] = theta_normalizer(x);
      r.values["normalizer_y"] = theta_normalizer(y);
    }
  }
  r.holds = r.max_residual <= 1e-12;
  r.detail = "additivity theta(x + y) = theta(x) + theta(y)";
  return r;
}

}  // namespace

AuditReport lemma_audit(LemmaClaim claim, const AuditOptions& options) {
  if (options.samples == 0) throw InputError("lemma_audit: samples >= 1");
  AuditReport r;
  switch (claim) {
    case LemmaClaim::Eqtr1:
      r = audit_eqtr1(options.scale.value_or(0.5), options);
      break;
    case LemmaClaim::Eqtr1Scale1:
      r = audit_eqtr1(1.0, options);
      break;
    case LemmaClaim::EtaCp:
      r = audit_eta_cp(options);
      break;
    case LemmaClaim::UpsilonCp:
      r = audit_upsilon_cp(options.scale.value_or(1.0), options);
      break;
    case LemmaClaim::Eq1t2:
      r = audit_eq1t2(options);
      break;
    case LemmaClaim::ThetaHomomorphism:
      r = audit_theta_homomorphism(options);
      break;
    case LemmaClaim::ThetaLinearity:
      r = audit_theta_linearity(options);
      break;
  }
  r.claim = to_string(claim);
  r.samples = options.samples;
  r.seed = options.seed;
  return r;
}

}  // namespace starlift
