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

#ifndef FERMITOMO_PROTOCOL_H_
#define FERMITOMO_PROTOCOL_H_

#include <vector>

#include "fermitomo/operations.h"

namespace fermitomo {

/// Ordered set of exchange-gate circuits acting on Majorana modes
/// c_1 .. c_{2k}.
struct GateSet {
  int pairs = 1;
  std::vector<Circuit> circuits;

  std::size_t size() const { return circuits.size(); }
  /// Dense unitary of circuit `index` on a system with `majorana_count`
  /// Majorana modes (>= 2 * pairs).
  Matrix unitary(std::size_t index, int majorana_count) const;
  Matrix unitary(std::size_t index) const { return unitary(index, 2 * pairs); }
};

/// State-preparation gates G_k, |G_k| = 4^{k-1}:
///   G_1 = {1},
///   G_{k+1} = {G, R_{2k,2k+1} G, R_{2k,2k+2} G, R_{2k,2k+1}^2 G : G in G_k}.
/// Element 4*i + s of G_{k+1} is S_s applied after element i of G_k.
GateSet generate_G(int k);

/// Measurement gates U_k, |U_k| = 3^{k-1}:
///   U_1 = {1},
///   U_{k+1} = {U, U R_{2k,2k+1}^{-1}, U R_{2k,2k+2}^{-1} : U in U_k}.
/// Element 3*i + s follows the same convention as generate_G.
GateSet generate_U(int k);

/// Inverse circuit: reversed order with every exchange gate inverted.
/// Only R gates are supported.
Circuit inverse_circuit(const Circuit& circuit);

/// 4^m states rho_G = G rho G^dag on m + 1 modes for G in G_{m+1}, with
/// rho the all-pairs +1 initial state.
std::vector<Matrix> prepared_states(int m);

/// U^dag Q_n U on m + 1 modes for U in U_{m+1} (outer) and n in
/// {0,1}^{m+1} (inner, lexicographic).
std::vector<Matrix> measurement_operators(int m);

/// Columns are transfer vectors of the given Hermitian operators.
RealMatrix transfer_columns(const std::vector<Matrix>& ops);

struct NoAncillaResult {
  int rank = 0;
  /// 4^{m-1}.
  int bound = 0;
  /// False when the budget ran out before the span stopped growing; `rank` is
  /// then only a lower bound.
  bool closed = false;
  int states_expanded = 0;
};

/// Breadth-first closure of the span of states reachable from rho_m on 2m
/// Majorana modes using R, T, Lambda and both parity-projection branches.
/// States that enlarge the span are queued in discovery order; every
/// operation is applied to each queued state in a fixed order (R on all
/// ordered pairs, T on all ordered pairs, Lambda and parity projections on
/// all sorted quadruples). `budget` caps the number of states expanded.
NoAncillaResult no_ancilla_rank(int m, int budget = 10000,
                                const std::vector<Matrix>& extra_initial_states = {});

/// Labels u on m modes with |u| even and u_{2m} = 0.
std::vector<MajoranaLabel> cplus_labels(int m);

/// mu_u in C_{1} C_u = mu_u C_{1-u}, computed exactly (always +1 or -1 for
/// even u).
int mu_sign(const MajoranaLabel& u);

/// [1 +/- (-1)^m C] C_u for u in cplus_labels(m).
std::vector<Matrix> cplus_elements(int m);
std::vector<Matrix> cminus_elements(int m);

struct CPlusExpansion {
  std::vector<MajoranaLabel> labels;
  std::vector<int> mu;
  /// alpha(l, i): coefficient of states[i] in C_u + mu_u C_{1-u}.
  RealMatrix alpha;
  double max_residual = 0.0;
  int state_rank = 0;
};

/// Solves C_u + mu_u C_{1-u} = sum_i alpha_{u,i} rho_i by least squares.
/// Throws std::invalid_argument when the states do not have rank 4^{m-1}.
CPlusExpansion cplus_basis_and_alpha(int m, const std::vector<Matrix>& states);

/// The 4^{m-1} states G rho_m G^dag, G in G_m, on m modes.
std::vector<Matrix> system_states(int m);

struct GhijReport {
  int m = 0;
  int admissible_labels = 0;
  double max_error_g = 0.0;
  double max_error_h = 0.0;
  double max_error_i = 0.0;
  double max_error_j = 0.0;
  double max_alpha_residual = 0.0;
  /// Ranks of span{G,H,I,J}, span{rho-bar}, and of their union.
  int operator_rank = 0;
  int state_rank = 0;
  int joint_rank = 0;
  /// Largest |Tr(A^dag B)| over A in C_+, B in C_-.
  double cplus_cminus_overlap = 0.0;

  double max_error() const;
  bool ok(double tol = kDefaultTolerance) const;
};

/// Dense check of the G/H/I/J decompositions in terms of the four rotated
/// copies of each prepared state, for every admissible label.
GhijReport verify_GHIJ(int m);

}  // namespace fermitomo

#endif  // FERMITOMO_PROTOCOL_H_
