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

#ifndef FERMITOMO_STATE_H_
#define FERMITOMO_STATE_H_

#include <string>
#include <vector>

#include "fermitomo/majorana.h"

namespace fermitomo {

/// Density matrix of m fermion modes in the Fock basis.
struct FermionState {
  Matrix rho;

  /// Throws std::invalid_argument unless rho is square with a power-of-two
  /// dimension. Physical validity is checked separately by validate_state.
  explicit FermionState(Matrix rho_in);
  int modes() const { return modes_from_dimension(rho.rows()); }
};

/// POVM {E_k} on m fermion modes.
struct FermionPOVM {
  std::vector<Matrix> elements;

  explicit FermionPOVM(std::vector<Matrix> elements_in);
  int modes() const { return modes_from_dimension(elements.front().rows()); }
};

/// One named predicate with the size of its violation.
struct Check {
  std::string name;
  bool passed = false;
  double violation = 0.0;
};

struct StateReport {
  bool hermitian = false;
  bool psd = false;
  bool normalized = false;
  bool sr_valid = false;
  double hermiticity_violation = 0.0;
  double min_eigenvalue = 0.0;
  double trace_error = 0.0;
  /// Max-abs entry of [C, rho].
  double sr_violation = 0.0;

  bool ok() const { return hermitian && psd && normalized && sr_valid; }
  std::vector<Check> checks() const;
};

/// Positivity, normalisation and the superselection rule [C, rho] = 0.
StateReport validate_state(const Matrix& rho, double tol = kDefaultTolerance);

/// P(rho) = (rho + C rho C) / 2. Throws std::invalid_argument when rho is not
/// Hermitian with unit trace.
FermionState sr_project_state(const FermionState& state, double tol = kDefaultTolerance);
Matrix sr_project(const Matrix& op);

struct PovmReport {
  bool psd = false;
  bool complete = false;
  bool sr_valid = false;
  double min_eigenvalue = 0.0;
  double completeness_error = 0.0;
  /// Largest [C, E_k] over k.
  double sr_violation = 0.0;

  bool ok() const { return psd && complete && sr_valid; }
  std::vector<Check> checks() const;
};

PovmReport validate_povm(const FermionPOVM& povm, double tol = kDefaultTolerance);

/// Coefficients Tr(C_u F) / sqrt(2^m) in lexicographic label order. Real
/// for Hermitian F; this returns the real part after checking the imaginary
/// part is below `tol`.
RealVector transfer_vector(const Matrix& op, double tol = 1e-9);

/// Complex coefficients Tr(C_u F) / sqrt(2^m) for an arbitrary operator.
Vector majorana_coefficients(const Matrix& op);

/// Inverse of majorana_coefficients.
Matrix from_majorana_coefficients(const Vector& coeffs);

/// Re-expresses an operator of m modes on a system of `total_modes` modes by
/// zero-padding every Majorana label; the operator then acts on modes
/// [first_mode, first_mode + m) (0-based) with the default ordering.
Matrix embed_operator(const Matrix& op, int first_mode, int total_modes);

}  // namespace fermitomo

#endif  // FERMITOMO_STATE_H_
