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

#ifndef FERMITOMO_OPERATIONS_H_
#define FERMITOMO_OPERATIONS_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "fermitomo/process.h"
#include "fermitomo/state.h"

namespace fermitomo {

enum class GateKind { kR, kT, kLambda, kParityProjection, kInitPair, kPairMeasure };

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view name);
/// Number of Majorana indices each kind takes.
int gate_arity(GateKind kind);

/// One operation of the Majorana operation set. `modes` are global 1-based
/// Majorana indices; R_{j,i} with swapped indices is the inverse of R_{i,j}.
struct GateSpec {
  GateKind kind = GateKind::kR;
  std::vector<int> modes;

  bool operator==(const GateSpec&) const = default;
};

/// Time-ordered list of gates (first element acts first).
using Circuit = std::vector<GateSpec>;

/// Throws std::invalid_argument on wrong arity, repeated or out-of-range
/// indices. `majorana_count` is 2m.
void validate_gate(const GateSpec& spec, int majorana_count);

/// Dense unitary for R, T and Lambda:
///   R_{i,j} = (1 + c_i c_j) / sqrt(2)
///   T_{i,j} = exp(pi/8 c_i c_j)
///   Lambda_{i,j,k,q} = exp(i pi/4 c_i c_j c_k c_q)
Matrix gate_unitary(const GateSpec& spec, int majorana_count);

/// Channel form U . U^dag of a unitary gate.
ProcessRep gate_channel(const GateSpec& spec, int majorana_count);

/// Product of the circuit's gate unitaries in time order.
Matrix circuit_unitary(const Circuit& circuit, int majorana_count);

/// Pi_eta = (1 + eta c_i c_j c_k c_q) / 2 for eta = +1 (index 0) and -1.
std::array<Matrix, 2> parity_projectors(const GateSpec& spec, int majorana_count);

/// M_eta(X) = Pi_eta X Pi_eta for eta = +1 (index 0) and -1 (index 1).
std::array<ProcessRep, 2> parity_projection_maps(const GateSpec& spec, int majorana_count);

/// rho_k = prod_{i=1}^k (1 + i c_{2i-1} c_{2i}) / 2 on k modes.
Matrix init_pair_state(int pairs);

/// Sign pattern eta for outcome index `outcome` of a pairwise measurement on
/// `pairs` pairs. Outcomes are ordered lexicographically with +1 before -1
/// and pair 1 most significant.
std::vector<int> outcome_signs(int outcome, int pairs);

/// Elements Pi_eta = prod_i (1 + eta_i i c_{2i-1} c_{2i}) / 2 in outcome order.
FermionPOVM pairwise_measurement_povm(int pairs);

/// Q_n = prod_i (i c_{2i-1} c_{2i})^{n_i}; `n` has one bit per pair, pair 1
/// most significant.
Matrix pair_observable(unsigned n, int pairs);

/// <Q_n> = sum_eta (prod_i eta_i^{n_i}) p(eta) from a pairwise outcome
/// distribution.
double pair_observable_expectation(unsigned n, int pairs, const std::vector<double>& probs);

/// Named maps on m modes: identity, R, T, Lambda, parity-flip,
/// phase:<angle>, random:<seed>.
ProcessRep builtin_map(std::string_view name, int modes);

}  // namespace fermitomo

#endif  // FERMITOMO_OPERATIONS_H_
