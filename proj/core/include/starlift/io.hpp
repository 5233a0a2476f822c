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

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "starlift/certify.hpp"
#include "starlift/linear_map.hpp"
#include "starlift/numeric.hpp"
#include "starlift/real_form.hpp"
#include "starlift/tensor.hpp"

namespace starlift::io {

using Json = nlohmann::json;

/// Library version string recorded in report provenance.
const char* version();

/// Schema violation. `where` is a JSON path such as "$.F[2].data" plus, for
/// syntax errors, the parser's line and column.
class SchemaError : public InputError {
 public:
  SchemaError(std::string where, const std::string& message);
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Canonical text: keys sorted, two-space indentation, doubles printed with
/// %.17g, integers as integers, trailing newline. Non-finite doubles are
/// written as null.
std::string canonical_dump(const Json& value);

/// Parses JSON text; syntax errors become SchemaError with line/column.
Json parse(const std::string& text, const std::string& source = "<input>");
Json read_file(const std::string& path);
/// Writes canonical_dump(value); "-" writes to stdout.
void write_file(const std::string& path, const Json& value);

// Schema documents. Every loader rejects unknown keys and names the offending
// path in its SchemaError.

/// {"rows","cols","field":"R"|"C","data":[[re,im],...]} row-major; field "R"
/// entries may be [re] or a bare number. Saved entries are always [re, im].
Json save_matrix(const CMat& m);
Json save_matrix(const Matrix& m);
Matrix load_matrix(const Json& j, const std::string& path = "$");

/// {"u": Matrix}. load_antiautomorphism validates unitarity and symmetry.
Json save_antiautomorphism(const AntiAutomorphism& phi);
CMat load_antiautomorphism_matrix(const Json& j, const std::string& path = "$");
AntiAutomorphism load_antiautomorphism(const Json& j,
                                       const std::string& path = "$");

/// {"n", "span":[Matrix,...], "unital", optional "blocks":[sizes]}. Without
/// "blocks" a block-diagonal structure is inferred when the span is a full
/// block-diagonal algebra.
Json save_star_algebra(const StarAlgebra& a);
StarAlgebra load_star_algebra(const Json& j, const std::string& path = "$");

/// {"dom","cod","linearity":"C"|"R","images":[Matrix,...]}.
Json save_linear_map(const LinearMap& phi);
LinearMap load_linear_map(const Json& j, const std::string& path = "$");

/// {"algebra","phi_map","F","epsilon","norm_mode", optional "phi"}.
Json save_certificate(const QDCertificate& cert);
QDCertificate load_certificate(const Json& j, const std::string& path = "$");

/// {"B": StarAlgebra, "ideal_blocks": [indices]}.
Json save_ideal(const IdealPresentation& ideal);
IdealPresentation load_ideal(const Json& j, const std::string& path = "$");

/// {"weight": Matrix}.
Json save_trace_weight(const CMat& weight);
CMat load_trace_weight(const Json& j, const std::string& path = "$");

/// {"phi","psi","F","epsilon", optional "target", optional "norm_mode"}.
struct NuclearWitnessDoc {
  LinearMap phi;
  LinearMap psi;
  FiniteSubset F;
  double epsilon = 0.0;
  std::optional<LinearMap> target;
  NormMode norm_mode = NormMode::ComplexOp;
};
NuclearWitnessDoc load_nuclear_witness(const Json& j,
                                       const std::string& path = "$");

/// {"A","phi","B","A1":[Matrix],"B1":[Matrix], optional "psi_field":"R"|"C"}.
struct FubiniDoc {
  StarAlgebra a;
  AntiAutomorphism phi;
  StarAlgebra b;
  std::vector<CMat> a1;
  std::vector<CMat> b1;
  std::optional<ScalarField> psi_field;
};
FubiniDoc load_fubini(const Json& j, const std::string& path = "$");

// Reports.
Json save_report(const DefectReport& r);
Json save_report(const AuditReport& r);
Json save_report(const RealCpReport& r);
Json save_report(const AntiAutomorphismReport& r);
Json save_comparison(const SubspaceComparison& c);
Json save_comparison(const KernelComparison& c);
/// {dims, principal_angle, verdict} plus the per-check comparisons.
Json save_report(const ExactnessReport& r);
Json save_report(const FubiniResult& r);

}  // namespace starlift::io
