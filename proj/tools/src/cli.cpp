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


#include "starlift/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "starlift/certify.hpp"
#include "starlift/io.hpp"
#include "starlift/linear_map.hpp"
#include "starlift/real_form.hpp"
#include "starlift/tensor.hpp"
#include "starlift/transport.hpp"

namespace starlift::cli {

namespace {

using io::Json;

struct RunConfig {
  std::optional<double> tol_flag;
  std::uint64_t seed = 0;
  std::string theta_mode = "paper";
  std::string norm_mode;
  std::string output;

  double tol() const {
    const double t = tol_flag ? *tol_flag : default_tolerance();
    if (!(t > 0.0)) throw InputError("--tol must be > 0");
    return t;
  }
};

struct Outcome {
  Json report;
  int code = kPass;
};

ThetaScale theta_of(const RunConfig& cfg) {
  return parse_theta_mode(cfg.theta_mode);
}

AntiAutomorphism phi_or_default(const std::string& path, Eigen::Index n) {
  if (path.empty()) return AntiAutomorphism::transpose(n);
  return io::load_antiautomorphism(io::read_file(path));
}

int verdict(bool ok) { return ok ? kPass : kFailure; }

// -- subcommands -----------------------------------------------------------

Outcome run_complexify(const std::string& map_path, const std::string& phi_path) {
  const LinearMap phi = io::load_linear_map(io::read_file(map_path));
  if (phi.linearity() != Linearity::Real) {
    throw InputError("complexify: map is already complex-linear");
  }
  const AntiAutomorphism form = phi_or_default(phi_path, phi.dom_dim());
  return {io::save_linear_map(complexify(phi, form)), kPass};
}

Outcome run_realform(const RunConfig& cfg, const std::string& phi_path,
                     const std::string& algebra_path, std::size_t samples) {
  const CMat u = io::load_antiautomorphism_matrix(io::read_file(phi_path));
  const auto check = check_antiautomorphism(u, samples, cfg.seed, cfg.tol());
  Json report{{"check", io::save_report(check)}};
  if (!check.pass) return {report, kFailure};
  const AntiAutomorphism form(u);
  std::vector<CMat> basis;
  if (algebra_path.empty()) {
    basis = real_form_basis(form);
  } else {
    const StarAlgebra a = io::load_star_algebra(io::read_file(algebra_path));
    basis = a.real_form(form, cfg.tol()).elements();
  }
  Json jb = Json::array();
  for (const auto& b : basis) jb.push_back(io::save_matrix(b));
  report["real_dim"] = basis.size();
  report["basis"] = jb;
  return {report, kPass};
}

Outcome run_choi(const std::string& map_path) {
  const LinearMap phi = io::load_linear_map(io::read_file(map_path));
  const ChoiMatrix c = choi(phi);
  return {Json{{"choi", io::save_matrix(c.value)},
               {"positivity_defect", positivity_defect(c.value)}},
          kPass};
}

Outcome run_cp_check(const RunConfig& cfg, const std::string& map_path,
                     const std::string& phi_path, long level,
                     std::size_t samples) {
  const LinearMap phi = io::load_linear_map(io::read_file(map_path));
  const double tol = cfg.tol();
  if (phi.linearity() == Linearity::Complex) {
    const double d = cp_defect(phi, tol);
    const bool ok = d >= -tol;
    return {Json{{"linearity", "C"},
                 {"defect", d},
                 {"verdict", ok ? "cp" : "not_cp"}},
            verdict(ok)};
  }
  RealCpOptions opts;
  opts.real_form = phi_or_default(phi_path, phi.dom_dim());
  opts.samples = samples;
  opts.seed = cfg.seed;
  opts.tol = tol;
  const Eigen::Index k = level > 0 ? level : phi.dom_dim();
  const RealCpReport real = cp_defect_real(phi, k, opts);
  const double complexified = cp_defect(complexify(phi, *opts.real_form), tol);
  const bool ok = real.positive(tol);
  return {Json{{"linearity", "R"},
               {"real", io::save_report(real)},
               {"complexified_defect", complexified},
               {"defect", real.defect},
               {"verdict", ok ? "cp" : "not_cp"}},
          verdict(ok)};
}

Outcome run_transport(const RunConfig& cfg, const std::string& map_path,
                      const std::string& psi_path, const std::string& phi_path) {
  const LinearMap phi = io::load_linear_map(io::read_file(map_path));
  if (!psi_path.empty()) {
    const LinearMap psi = io::load_linear_map(io::read_file(psi_path));
    const auto t = transport_factorization(phi, psi);
    const bool ok = t.residual <= cfg.tol();
    return {Json{{"mode", "factorization"},
                 {"phi_prime", io::save_linear_map(t.phi_prime)},
                 {"psi_prime", io::save_linear_map(t.psi_prime)},
                 {"residual", t.residual}},
            verdict(ok)};
  }
  const ThetaScale scale = theta_of(cfg);
  const AntiAutomorphism form = phi_or_default(phi_path, phi.dom_dim());
  const RealifiedMap r = realify_map(phi, form, scale);
  Json report{{"mode", "realify"},
              {"theta_mode", to_string(scale)},
              {"dom", r.dom},
              {"cod", r.cod},
              {"nonlinear", r.nonlinear}};
  if (r.linear) {
    report["map"] = io::save_linear_map(*r.linear);
  } else {
    report["flags"] = Json::array({"nonlinear theta: no linear map to emit"});
  }
  return {report, kPass};
}

Outcome run_qd_verify(const RunConfig& cfg, const std::string& cert_path,
                      const std::string& trace_path) {
  QDCertificate cert = io::load_certificate(io::read_file(cert_path));
  if (!cfg.norm_mode.empty()) cert.norm_mode = parse_norm_mode(cfg.norm_mode);
  DefectReport r;
  if (trace_path.empty()) {
    r = qd_verify(cert);
  } else {
    const TraceWitness tau(cert.algebra,
                           io::load_trace_weight(io::read_file(trace_path)),
                           cfg.tol());
    r = trace_qd_verify(cert, tau);
  }
  return {io::save_report(r), verdict(r.pass)};
}

Outcome run_qd_transport(const RunConfig& cfg, const std::string& cert_path,
                         const std::string& direction,
                         const std::string& phi_path) {
  QDCertificate cert = io::load_certificate(io::read_file(cert_path));
  if (!phi_path.empty()) {
    cert.real_form = io::load_antiautomorphism(io::read_file(phi_path));
  }
  QDTransport t = [&] {
    if (direction == "complexify") {
      if (!cert.real_form) {
        cert.real_form = AntiAutomorphism::transpose(cert.algebra.n());
      }
      return qd_complexify(cert, std::nullopt, cfg.tol());
    }
    if (direction == "realify") {
      const AntiAutomorphism form =
          cert.real_form ? *cert.real_form
                         : AntiAutomorphism::transpose(cert.algebra.n());
      return qd_realify(cert, form, theta_of(cfg), cfg.tol());
    }
    throw InputError("--direction must be complexify or realify");
  }();
  Json report{{"direction", direction},
              {"report", io::save_report(t.report)},
              {"certificate",
               t.cert ? io::save_certificate(*t.cert) : Json(nullptr)}};
  if (direction == "realify") report["theta_mode"] = cfg.theta_mode;
  const bool ok = t.report.pass && t.report.checks_hold() &&
                  t.report.flags.empty();
  return {report, verdict(ok)};
}

Outcome run_trace_audit(const RunConfig& cfg, const std::string& cert_path,
                        const std::string& trace_path,
                        const std::string& phi_path, double scale) {
  const QDCertificate cert = io::load_certificate(io::read_file(cert_path));
  const TraceWitness tau(cert.algebra,
                         io::load_trace_weight(io::read_file(trace_path)),
                         cfg.tol());
  const AntiAutomorphism form =
      !phi_path.empty() ? io::load_antiautomorphism(io::read_file(phi_path))
      : cert.real_form  ? *cert.real_form
                        : AntiAutomorphism::transpose(cert.algebra.n());
  const TraceTransport t =
      trace_transport(tau, cert.algebra, form, scale, cert, theta_of(cfg));
  const bool ok =
      t.report.pass && t.report.checks_hold() && t.report.flags.empty();
  return {Json{{"scale", t.scale},
               {"theta_mode", cfg.theta_mode},
               {"imaginary_leak", t.imaginary_leak},
               {"tracial_residual", t.tracial_residual},
               {"report", io::save_report(t.report)}},
          verdict(ok)};
}

Outcome run_nuclear(const RunConfig& cfg, const std::string& path) {
  const io::NuclearWitnessDoc doc =
      io::load_nuclear_witness(io::read_file(path));
  const NormMode mode =
      cfg.norm_mode.empty() ? doc.norm_mode : parse_norm_mode(cfg.norm_mode);
  const DefectReport r = nuclear_witness_verify(doc.phi, doc.psi, doc.F,
                                                doc.target, doc.epsilon, mode);
  return {io::save_report(r), verdict(r.pass)};
}

Outcome run_fubini(const std::string& path, const std::string& field_flag) {
  const io::FubiniDoc doc = io::load_fubini(io::read_file(path));
  std::optional<ScalarField> field = doc.psi_field;
  if (field_flag == "R") field = ScalarField::Real;
  if (field_flag == "C") field = ScalarField::Complex;
  if (!field_flag.empty() && field_flag != "R" && field_flag != "C") {
    throw InputError("--psi-field must be R or C");
  }
  std::vector<ScalarField> fields =
      field ? std::vector<ScalarField>{*field}
            : std::vector<ScalarField>{ScalarField::Real, ScalarField::Complex};
  Json report = Json::object();
  Json holds_for = Json::array();
  for (auto f : fields) {
    const FubiniResult r = fubini(doc.a1, doc.b1, doc.a, doc.phi, doc.b, f);
    const std::string key = f == ScalarField::Real ? "R" : "C";
    report[key] = io::save_report(r);
    if (r.comparison.equal) holds_for.push_back(key);
  }
  report["holds_for"] = holds_for;
  return {report, verdict(!holds_for.empty())};
}

Outcome run_exactness(const RunConfig& cfg, const std::string& algebra_path,
                      const std::string& phi_path,
                      const std::string& ideal_path) {
  const StarAlgebra a = io::load_star_algebra(io::read_file(algebra_path));
  const AntiAutomorphism form = phi_or_default(phi_path, a.n());
  const IdealPresentation ideal = io::load_ideal(io::read_file(ideal_path));
  (void)cfg;
  const ExactnessReport r = exactness_check(a, form, ideal);
  return {io::save_report(r), verdict(r.exact())};
}

Outcome run_lemma_audit(const RunConfig& cfg, const std::string& claim,
                        std::size_t samples, std::optional<double> scale) {
  AuditOptions opts;
  opts.samples = samples;
  opts.seed = cfg.seed;
  opts.scale = scale;
  if (claim == "all") {
    Json reports = Json::array();
    bool all_hold = true;
    for (auto c : all_lemma_claims()) {
      const AuditReport r = lemma_audit(c, opts);
      all_hold = all_hold && r.holds;
      reports.push_back(io::save_report(r));
    }
    return {Json{{"audits", reports}}, verdict(all_hold)};
  }
  const AuditReport r = lemma_audit(parse_lemma_claim(claim), opts);
  return {io::save_report(r), verdict(r.holds)};
}

}  // namespace

double default_tolerance() {
  const char* env = std::getenv("STARLIFT_TOL");
  if (env == nullptr || *env == '\0') return 1e-9;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0)) {
    throw InputError(std::string("STARLIFT_TOL must be a positive number, got '") +
                     env + "'");
  }
  return v;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Real and complex C*-algebra certificate toolkit", "starlift"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(io::version()));

  RunConfig cfg;
  app.add_option("--tol", cfg.tol_flag,
                 "numerical tolerance (overrides STARLIFT_TOL; default 1e-9)");
  app.add_option("--seed", cfg.seed, "random seed for sampled checks");
  app.add_option("--theta-mode", cfg.theta_mode, "paper | fixed:<value>");
  app.add_option("--norm-mode", cfg.norm_mode,
                 "complex_op | real_col1 | phi_split");
  app.add_option("--output", cfg.output, "write the report here, not stdout");

  std::string map_path, phi_path, psi_path, cert_path, trace_path,
      algebra_path, ideal_path, input_path, direction = "complexify", claim,
      psi_field;
  std::size_t samples = 32;
  std::size_t audit_samples = 100;
  long level = 0;
  double trace_scale = 0.5;
  std::optional<double> audit_scale;

  std::function<Outcome()> action;

  auto* c = app.add_subcommand("complexify", "complexify a real-linear map");
  c->add_option("--map", map_path, "LinearMapMat (linearity R)")->required();
  c->add_option("--phi", phi_path, "antiautomorphism (default: transpose)");
  c->callback([&] { action = [&] { return run_complexify(map_path, phi_path); }; });

  c = app.add_subcommand("realform", "check an antiautomorphism, list A_Phi");
  c->add_option("--phi", phi_path, "antiautomorphism")->required();
  c->add_option("--algebra", algebra_path, "restrict to a subalgebra");
  c->add_option("--samples", samples, "random samples for the axiom check");
  c->callback([&] {
    action = [&] { return run_realform(cfg, phi_path, algebra_path, samples); };
  });

  c = app.add_subcommand("choi", "Choi matrix of a complex-linear map");
  c->add_option("--map", map_path, "LinearMapMat (linearity C)")->required();
  c->callback([&] { action = [&] { return run_choi(map_path); }; });

  c = app.add_subcommand("cp-check", "complete positivity check");
  c->add_option("--map", map_path, "LinearMapMat")->required();
  c->add_option("--phi", phi_path, "real form for real-linear maps");
  c->add_option("--level", level, "amplification level (default: n)");
  c->add_option("--samples", samples, "random positive samples");
  c->callback([&] {
    action = [&] {
      return run_cp_check(cfg, map_path, phi_path, level, samples);
    };
  });

  c = app.add_subcommand("transport",
                         "sigma/rho factorization transport or realify a map");
  c->add_option("--map", map_path, "phi")->required();
  c->add_option("--psi", psi_path, "psi (factorization mode)");
  c->add_option("--phi", phi_path, "antiautomorphism (realify mode)");
  c->callback([&] {
    action = [&] { return run_transport(cfg, map_path, psi_path, phi_path); };
  });

  c = app.add_subcommand("qd-verify", "verify a quasidiagonal certificate");
  c->add_option("--cert", cert_path, "certificate")->required();
  c->add_option("--trace", trace_path, "trace witness for the trace defect");
  c->callback([&] {
    action = [&] { return run_qd_verify(cfg, cert_path, trace_path); };
  });

  c = app.add_subcommand("qd-transport", "transport a certificate");
  c->add_option("--cert", cert_path, "certificate")->required();
  c->add_option("--direction", direction, "complexify | realify");
  c->add_option("--phi", phi_path, "antiautomorphism override");
  c->callback([&] {
    action = [&] {
      return run_qd_transport(cfg, cert_path, direction, phi_path);
    };
  });

  c = app.add_subcommand("trace-audit", "pull a trace back to the real form");
  c->add_option("--cert", cert_path, "complex certificate")->required();
  c->add_option("--trace", trace_path, "trace witness")->required();
  c->add_option("--phi", phi_path, "antiautomorphism override");
  c->add_option("--scale", trace_scale, "upsilon1 scale (default 0.5)");
  c->callback([&] {
    action = [&] {
      return run_trace_audit(cfg, cert_path, trace_path, phi_path, trace_scale);
    };
  });

  c = app.add_subcommand("nuclear-verify", "verify a factorization witness");
  c->add_option("--witness", input_path, "witness document")->required();
  c->callback([&] { action = [&] { return run_nuclear(cfg, input_path); }; });

  c = app.add_subcommand("fubini", "Fubini product against the tensor span");
  c->add_option("--input", input_path, "fubini document")->required();
  c->add_option("--psi-field", psi_field, "R | C (default: both)");
  c->callback([&] { action = [&] { return run_fubini(input_path, psi_field); }; });

  c = app.add_subcommand("exactness", "kernel of id (x) pi vs A (x) I");
  c->add_option("--algebra", algebra_path, "A")->required();
  c->add_option("--phi", phi_path, "antiautomorphism (default: transpose)");
  c->add_option("--ideal", ideal_path, "ideal presentation")->required();
  c->callback([&] {
    action = [&] {
      return run_exactness(cfg, algebra_path, phi_path, ideal_path);
    };
  });

  c = app.add_subcommand("lemma-audit", "audit a documented claim");
  c->add_option("--claim", claim, "claim id or 'all'")->required();
  c->add_option("--samples", audit_samples, "sample count");
  c->add_option("--scale", audit_scale, "upsilon scale");
  c->callback([&] {
    action = [&] {
      return run_lemma_audit(cfg, claim, audit_samples, audit_scale);
    };
  });

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-') {
    const auto subs = app.get_subcommands([](const CLI::App*) { return true; });
    const bool known = std::any_of(subs.begin(), subs.end(), [&](const CLI::App* s) {
      return s->get_name() == args.front();
    });
    if (!known) {
      err << "starlift: unknown subcommand '" << args.front() << "'\n\n"
          << app.help();
      return kInputError;
    }
  }

  std::vector<const char*> argv{"starlift"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForVersion&) {
    out << io::version() << "\n";
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "starlift: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  try {
    cfg.tol();
    const Outcome o = action();
    if (cfg.output.empty()) {
      out << io::canonical_dump(o.report);
    } else {
      io::write_file(cfg.output, o.report);
    }
    if (o.code == kFailure) err << "starlift: verification failed\n";
    return o.code;
  } catch (const InputError& e) {
    err << "starlift: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "starlift: error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace starlift::cli
