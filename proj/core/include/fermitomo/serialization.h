// Copyright 2026 The fermitomo Authors
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

#ifndef FERMITOMO_SERIALIZATION_H_
#define FERMITOMO_SERIALIZATION_H_

#include <filesystem>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "fermitomo/process.h"
#include "fermitomo/protocol.h"
#include "fermitomo/state.h"
#include "fermitomo/tomography.h"

namespace fermitomo {

using Json = nlohmann::json;

/// Malformed JSON or a document that does not match the expected schema.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic text form: keys sorted, two-space indentation, arrays of
/// scalars (and arrays of such arrays) kept on one line, every floating
/// point number printed with 17 significant digits.
std::string dump_canonical(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

Json to_json(const Complex& z);
Json to_json(const Matrix& x);
Json to_json(const RealMatrix& x);
Complex complex_from_json(const Json& j);
Matrix complex_matrix_from_json(const Json& j);
RealMatrix real_matrix_from_json(const Json& j);

/// {"type": "state", "m": int, "rho": complex matrix}
Json to_json(const FermionState& s);
FermionState state_from_json(const Json& j);

/// {"type": "povm", "m": int, "elements": [complex matrix, ...]}
Json to_json(const FermionPOVM& p);
FermionPOVM povm_from_json(const Json& j);

/// {"m": int, "representation": "kraus"|"chi"|"choi"|"transfer", "data": ...}
/// with data a list of complex matrices (kraus), a complex matrix (chi,
/// choi) or a real matrix (transfer).
Json to_json(const ProcessRep& p);
ProcessRep process_from_json(const Json& j);

/// {"kind": "R"|"T"|"Lambda"|"ParityProjection", "modes": [int, ...]}
Json to_json(const GateSpec& g);
GateSpec gate_from_json(const Json& j);
Json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const Json& j);

/// Gate sets G_{m+1} and U_{m+1} with their ordering contract.
Json gatesets_to_json(int m);

/// {"type": "experiment_record", "m", "settings": [[g, u], ...],
///  "probabilities" | "counts", "shots", "seed"}
Json to_json(const ExperimentRecord& r);
ExperimentRecord record_from_json(const Json& j);

/// {"type": "reconstruction", "m", "even_block", "odd_block", "chi",
///  "residual_norm", "design_rank", "unknowns", "condition_number",
///  "informationally_complete"}
Json to_json(const ReconstructionResult& r);
ReconstructionResult reconstruction_from_json(const Json& j);

Json to_json(const ErrorMetrics& e);
Json to_json(const BlockErrors& e);

enum class DocumentKind { kState, kPovm, kProcess, kRecord, kReconstruction };

/// Kind of a parsed document: the "type" field, or a process when the
/// document has a "representation" field.
DocumentKind document_kind(const Json& j);

}  // namespace fermitomo

#endif  // FERMITOMO_SERIALIZATION_H_
