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

#ifndef FERMITOMO_LINALG_H_
#define FERMITOMO_LINALG_H_

#include "fermitomo/majorana.h"

namespace fermitomo {

/// Threshold (relative to the largest pivot) used for every integer rank claim.
inline constexpr double kRankThreshold = 1e-8;

/// Eigenvalues below -kPsdThreshold make a Hermitian matrix non-PSD.
inline constexpr double kPsdThreshold = 1e-9;

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& x) {
  return x.size() == 0 ? 0.0 : static_cast<double>(x.cwiseAbs().maxCoeff());
}

/// Largest |x_ij - conj(x_ji)|.
double hermiticity_violation(const Matrix& x);

/// Smallest eigenvalue of the Hermitian part of x.
double min_eigenvalue(const Matrix& x);

/// Max-abs entry of [a, b].
double commutator_norm(const Matrix& a, const Matrix& b);

/// Rank via column-pivoted Householder QR with a relative pivot threshold.
int numeric_rank(const RealMatrix& x, double threshold = kRankThreshold);
int numeric_rank(const Matrix& x, double threshold = kRankThreshold);

Matrix kron(const Matrix& a, const Matrix& b);

/// Tr_A of an operator on A (x) B, with A the leading tensor factor.
Matrix partial_trace_first(const Matrix& x, Eigen::Index dim_a, Eigen::Index dim_b);
/// Tr_B of an operator on A (x) B.
Matrix partial_trace_second(const Matrix& x, Eigen::Index dim_a, Eigen::Index dim_b);

/// f(H) for Hermitian H through its eigendecomposition.
Matrix hermitian_function(const Matrix& h, double (*f)(double));
/// exp(i * H) for Hermitian H.
Matrix unitary_from_hermitian(const Matrix& h);
/// H^{-1/2} for positive definite H; throws if an eigenvalue is <= tol.
Matrix inverse_sqrt(const Matrix& h, double tol = 1e-12);

}  // namespace fermitomo

#endif  // FERMITOMO_LINALG_H_
