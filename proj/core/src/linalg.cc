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

#include "fermitomo/linalg.h"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace fermitomo {

double hermiticity_violation(const Matrix& x) { return max_abs(x - x.adjoint()); }

double min_eigenvalue(const Matrix& x) {
  const Matrix h = 0.5 * (x + x.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double commutator_norm(const Matrix& a, const Matrix& b) { return max_abs(a * b - b * a); }

int numeric_rank(const RealMatrix& x, double threshold) {
  if (x.size() == 0) return 0;
  Eigen::ColPivHouseholderQR<RealMatrix> qr(x);
  qr.setThreshold(threshold);
  return static_cast<int>(qr.rank());
}

int numeric_rank(const Matrix& x, double threshold) {
  if (x.size() == 0) return 0;
  Eigen::ColPivHouseholderQR<Matrix> qr(x);
  qr.setThreshold(threshold);
  return static_cast<int>(qr.rank());
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix partial_trace_first(const Matrix& x, Eigen::Index dim_a, Eigen::Index dim_b) {
  if (x.rows() != dim_a * dim_b || x.cols() != dim_a * dim_b) {
    throw std::invalid_argument("partial trace: dimension mismatch");
  }
  Matrix out = Matrix::Zero(dim_b, dim_b);
  for (Eigen::Index a = 0; a < dim_a; ++a) out += x.block(a * dim_b, a * dim_b, dim_b, dim_b);
  return out;
}

Matrix partial_trace_second(const Matrix& x, Eigen::Index dim_a, Eigen::Index dim_b) {
  if (x.rows() != dim_a * dim_b || x.cols() != dim_a * dim_b) {
    throw std::invalid_argument("partial trace: dimension mismatch");
  }
  Matrix out(dim_a, dim_a);
  for (Eigen::Index i = 0; i < dim_a; ++i) {
    for (Eigen::Index j = 0; j < dim_a; ++j) {
      out(i, j) = x.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
    }
  }
  return out;
}

Matrix hermitian_function(const Matrix& h, double (*f)(double)) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (h + h.adjoint()));
  RealVector values = solver.eigenvalues().unaryExpr(f);
  return solver.eigenvectors() * values.cast<Complex>().asDiagonal() *
         solver.eigenvectors().adjoint();
}

Matrix unitary_from_hermitian(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (h + h.adjoint()));
  Vector phases(solver.eigenvalues().size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::polar(1.0, solver.eigenvalues()(k));
  }
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

Matrix inverse_sqrt(const Matrix& h, double tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (h + h.adjoint()));
  if (solver.eigenvalues().minCoeff() <= tol) {
    throw std::domain_error("inverse_sqrt: matrix is not positive definite");
  }
  RealVector values = solver.eigenvalues().cwiseSqrt().cwiseInverse();
  return solver.eigenvectors() * values.cast<Complex>().asDiagonal() *
         solver.eigenvectors().adjoint();
}

}  // namespace fermitomo
