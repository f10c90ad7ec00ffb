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

#include "fermitomo/state.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fermitomo/linalg.h"

namespace fermitomo {

namespace {

void require_square_power_of_two(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("operator is not square");
  modes_from_dimension(m.rows());
}

}  // namespace

FermionState::FermionState(Matrix rho_in) : rho(std::move(rho_in)) {
  require_square_power_of_two(rho);
}

FermionPOVM::FermionPOVM(std::vector<Matrix> elements_in) : elements(std::move(elements_in)) {
  if (elements.empty()) throw std::invalid_argument("POVM has no elements");
  for (const auto& e : elements) {
    require_square_power_of_two(e);
    if (e.rows() != elements.front().rows()) {
      throw std::invalid_argument("POVM elements have different dimensions");
    }
  }
}

std::vector<Check> StateReport::checks() const {
  return {{"hermitian", hermitian, hermiticity_violation},
          {"psd", psd, std::max(0.0, -min_eigenvalue)},
          {"normalized", normalized, trace_error},
          {"sr_valid", sr_valid, sr_violation}};
}

StateReport validate_state(const Matrix& rho, double tol) {
  require_square_power_of_two(rho);
  const int m = modes_from_dimension(rho.rows());
  StateReport r;
  r.hermiticity_violation = hermiticity_violation(rho);
  r.hermitian = r.hermiticity_violation <= tol;
  r.min_eigenvalue = min_eigenvalue(rho);
  r.psd = r.min_eigenvalue >= -std::max(tol, kPsdThreshold);
  r.trace_error = std::abs(rho.trace() - Complex(1.0));
  r.normalized = r.trace_error <= tol;
  r.sr_violation = commutator_norm(parity_operator(m), rho);
  r.sr_valid = r.sr_violation <= tol;
  return r;
}

Matrix sr_project(const Matrix& op) {
  require_square_power_of_two(op);
  const Matrix c = parity_operator(modes_from_dimension(op.rows()));
  return 0.5 * (op + c * op * c);
}

FermionState sr_project_state(const FermionState& state, double tol) {
  if (hermiticity_violation(state.rho) > tol) {
    throw std::invalid_argument("sr_project_state: input is not Hermitian");
  }
  if (std::abs(state.rho.trace() - Complex(1.0)) > tol) {
    throw std::invalid_argument("sr_project_state: input is not normalized");
  }
  return FermionState(sr_project(state.rho));
}

std::vector<Check> PovmReport::checks() const {
  return {{"psd", psd, std::max(0.0, -min_eigenvalue)},
          {"complete", complete, completeness_error},
          {"sr_valid", sr_valid, sr_violation}};
}

PovmReport validate_povm(const FermionPOVM& povm, double tol) {
  const int m = povm.modes();
  const Matrix c = parity_operator(m);
  Matrix sum = Matrix::Zero(c.rows(), c.cols());
  PovmReport r;
  r.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (const auto& e : povm.elements) {
    r.min_eigenvalue = std::min(r.min_eigenvalue, min_eigenvalue(e));
    r.sr_violation = std::max(r.sr_violation, commutator_norm(c, e));
    sum += e;
  }
  r.completeness_error = max_abs(sum - Matrix::Identity(c.rows(), c.cols()));
  r.psd = r.min_eigenvalue >= -std::max(tol, kPsdThreshold);
  r.complete = r.completeness_error <= tol;
  r.sr_valid = r.sr_violation <= tol;
  return r;
}

Vector majorana_coefficients(const Matrix& op) {
  require_square_power_of_two(op);
  const int m = modes_from_dimension(op.rows());
  const double scale = 1.0 / std::sqrt(static_cast<double>(op.rows()));
  const auto labels = all_labels(m);
  Vector out(static_cast<Eigen::Index>(labels.size()));
  for (const auto& l : labels) {
    out(static_cast<Eigen::Index>(l.index())) = monomial(l).trace_with(op) * scale;
  }
  return out;
}

Matrix from_majorana_coefficients(const Vector& coeffs) {
  const Eigen::Index n = coeffs.size();
  const int two_m = modes_from_dimension(n);
  if (two_m % 2 != 0) throw std::invalid_argument("coefficient vector length is not 4^m");
  const int m = two_m / 2;
  const Eigen::Index dim = Eigen::Index{1} << m;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& l : all_labels(m)) {
    const Complex c = coeffs(static_cast<Eigen::Index>(l.index()));
    if (c == Complex(0.0)) continue;
    const MonomialOperator op = monomial(l);
    for (Eigen::Index k = 0; k < dim; ++k) out(op.target[k], k) += c * scale * op.coeff[k];
  }
  return out;
}

Matrix embed_operator(const Matrix& op, int first_mode, int total_modes) {
  const int m = modes_from_dimension(op.rows());
  const Vector coeffs = majorana_coefficients(op);
  const Eigen::Index dim = Eigen::Index{1} << total_modes;
  const double scale = 1.0 / std::sqrt(static_cast<double>(Eigen::Index{1} << m));
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& l : all_labels(m)) {
    const Complex c = coeffs(static_cast<Eigen::Index>(l.index()));
    if (c == Complex(0.0)) continue;
    const MonomialOperator big = monomial(l.embedded(first_mode, total_modes));
    for (Eigen::Index k = 0; k < dim; ++k) out(big.target[k], k) += c * scale * big.coeff[k];
  }
  return out;
}

RealVector transfer_vector(const Matrix& op, double tol) {
  const Vector c = majorana_coefficients(op);
  if (c.size() > 0 && c.imag().cwiseAbs().maxCoeff() > tol) {
    throw std::domain_error("transfer_vector: operator is not Hermitian");
  }
  return c.real();
}

}  // namespace fermitomo
