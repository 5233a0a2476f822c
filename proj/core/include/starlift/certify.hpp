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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "starlift/linear_map.hpp"
#include "starlift/numeric.hpp"
#include "starlift/real_form.hpp"
#include "starlift/transport.hpp"

namespace starlift {

/// Which norm a certificate measures defects in.
///
/// ComplexOp: operator norm on source and target.
/// RealCol1: operator norm on the source, induced column-sum norm on a real
///   target.
/// PhiSplit: ||a + ib|| = ||a|| + ||b|| with the split taken relative to the
///   algebra's antiautomorphism on the source and to entrywise real and
///   imaginary parts on the target.
enum class NormMode { ComplexOp, RealCol1, PhiSplit };

const char* to_string(NormMode mode);
NormMode parse_norm_mode(const std::string& text);

/// ||r|| + ||s|| for x = r + i s relative to Phi.
double split_norm(const AntiAutomorphism& phi, const CMat& x);
/// ||Re x|| + ||Im x||.
double entrywise_split_norm(const CMat& x);

struct FiniteSubset {
  std::vector<CMat> elements;
  std::vector<std::string> labels;

  FiniteSubset() = default;
  /// Throws InputError if empty or of mixed shapes.
  explicit FiniteSubset(std::vector<CMat> elems,
                        std::vector<std::string> names = {});
  std::size_t size() const { return elements.size(); }
  std::string label(std::size_t i) const;
};

struct QDCertificate {
  StarAlgebra algebra;
  std::optional<AntiAutomorphism> real_form;
  FiniteSubset F;
  LinearMap map;
  double epsilon = 0.0;
  NormMode norm_mode = NormMode::ComplexOp;

  Eigen::Index k() const { return map.cod_dim(); }
  /// ||phi(1) - 1||.
  double unitality_defect() const;
  /// Throws InputError on dimension mismatch, F outside the algebra,
  /// nonpositive epsilon, or a non-unital map on a unital algebra.
  void validate(double tol = 1e-9) const;
};

/// Worst-case input for one recorded defect. Indices refer to F.
struct DefectWitness {
  std::string kind;
  std::size_t first = 0;
  std::optional<std::size_t> second;
  double value = 0.0;
};

/// A named inequality the verifier replayed numerically.
struct BoundCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

struct DefectReport {
  double epsilon = 0.0;
  double max_mult_defect = 0.0;
  double max_norm_defect = 0.0;
  std::optional<double> max_trace_defect;
  std::optional<double> max_factorization_defect;
  std::vector<DefectWitness> witnesses;
  std::vector<BoundCheck> checks;
  std::vector<std::string> flags;
  bool pass = false;

  /// Recomputes `pass`: every recorded defect below epsilon.
  void finalize();
  bool checks_hold() const;
};

/// Multiplicative and norm defects of cert.map on cert.F in cert.norm_mode.
DefectReport qd_verify(const QDCertificate& cert);

struct QDTransport {
  std::optional<QDCertificate> cert;
  DefectReport report;
};

/// Complexifies a certificate over A_Phi.
///
/// F_A is `complex_set` when given, otherwise {F[2j] + i F[2j+1]} (an odd
/// trailing element pairs with 0). The report carries the complex defects and
/// per-pair checks that the complex multiplicative defect is bounded by the
/// four contributing real defects and the split-norm defect by the two real
/// norm defects (both within `slack`).
QDTransport qd_complexify(const QDCertificate& real_cert,
                          const std::optional<std::vector<CMat>>& complex_set =
                              std::nullopt,
                          double slack = 1e-9);

/// 1 / (max_{x in F u F.F} N(phi(x)) + 1): the constant that keeps the
/// fixed-linear theta contractive on the certificate's working set.
double fixed_theta_scale(const LinearMap& phi, const FiniteSubset& F);

/// Transports a complex certificate to A_Phi via phi' = theta o phi o conj_phi.
///
/// F is replaced by the real-form parts of its elements. Defects are measured
/// in RealCol1 mode. In fixed-linear mode each pair is checked against
/// s col1(sigma(D)) + |s - s^2| col1(sigma(phi(a)phi(b))) + slack, D the complex
/// multiplicative defect; the normalized mode only reports and sets a flag.
QDTransport qd_realify(const QDCertificate& complex_cert,
                       const AntiAutomorphism& real_form,
                       const ThetaScale& scale, double slack = 1e-9);

struct CompressionWitness {
  CMat b;
  LinearMap phi;
  LinearMap psi;
};

/// max_{a in F} ||psi o phi(a) - target(a)||; target defaults to the identity.
DefectReport nuclear_witness_verify(const LinearMap& phi, const LinearMap& psi,
                                    const FiniteSubset& F,
                                    const std::optional<LinearMap>& target,
                                    double epsilon,
                                    NormMode mode = NormMode::ComplexOp);

/// For each witness: max_{a in F} ||b* target(a) b - psi_b o phi_b(a)||.
DefectReport weak_nuclear_verify(const LinearMap& target, const FiniteSubset& F,
                                 const std::vector<CompressionWitness>& witnesses,
                                 double epsilon);

/// Linear functional x -> tr(W x) on an algebra.
class TraceWitness {
 public:
  /// Throws InputError if the tracial residual on the algebra exceeds tol.
  TraceWitness(const StarAlgebra& algebra, CMat weight, double tol = 1e-9);

  static TraceWitness normalized_trace(const StarAlgebra& algebra);

  Complex operator()(const CMat& x) const;
  const CMat& weight() const { return weight_; }
  double tracial_residual() const { return tracial_residual_; }
  /// min over sampled c of Re tau(c* c) (normalized samples).
  double positivity_defect() const { return positivity_defect_; }
  Complex unit_value() const { return unit_value_; }

 private:
  CMat weight_;
  double tracial_residual_ = 0.0;
  double positivity_defect_ = 0.0;
  Complex unit_value_ = 0.0;
};

/// Adds max_{a in F} |tau_k(phi(a)) - tau(a)| to qd_verify's report.
/// Throws InputError when phi is not unital.
DefectReport trace_qd_verify(const QDCertificate& cert, const TraceWitness& tau);

struct TraceTransport {
  /// Real-valued functional a -> upsilon1(tau(a)) on A_Phi.
  std::function<double(const CMat&)> real_trace;
  double scale = 1.0;
  /// max |Im tau(a)| over a basis of A_Phi; nonzero means tau(A_Phi) is not
  /// real and the result is flagged.
  double imaginary_leak = 0.0;
  double tracial_residual = 0.0;
  DefectReport report;
};

/// Pulls a trace on A back to A_Phi through upsilon1 and, when a certificate
/// is supplied, replays the chain of estimates bounding
/// |tau_2k(phi'(a)) - tau_{A_Phi}(a)| step by step (each step measured, none
/// assumed).
TraceTransport trace_transport(const TraceWitness& tau,
                               const StarAlgebra& algebra,
                               const AntiAutomorphism& real_form, double scale,
                               const std::optional<QDCertificate>& cert =
                                   std::nullopt,
                               const ThetaScale& theta = ThetaScale::normalized());

enum class LemmaClaim {
  Eqtr1,
  Eqtr1Scale1,
  EtaCp,
  UpsilonCp,
  Eq1t2,
  ThetaHomomorphism,
  ThetaLinearity,
};

const char* to_string(LemmaClaim claim);
/// Throws InputError for an unknown name.
LemmaClaim parse_lemma_claim(const std::string& name);
std::vector<LemmaClaim> all_lemma_claims();

struct AuditOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  /// upsilon scale for Eqtr1 (default 1/2) and UpsilonCp (default 1).
  std::optional<double> scale;
};

struct AuditReport {
  std::string claim;
  bool holds = false;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double max_residual = 0.0;
  std::map<std::string, double> values;
  std::map<std::string, CMat> witness;
  std::string detail;
};

/// Evaluates a claim on deterministic inputs and returns either
/// holds-on-all-samples or a replayable counterexample.
AuditReport lemma_audit(LemmaClaim claim, const AuditOptions& options);

}  // namespace starlift
