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

#include "fermitomo/operations.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fermitomo/linalg.h"
#include "fermitomo/random_maps.h"

namespace fermitomo {

namespace {

constexpr Complex kI(0.0, 1.0);

Matrix majorana_product(const std::vector<int>& indices, int modes) {
  const Eigen::Index d = Eigen::Index{1} << modes;
  Matrix out = Matrix::Identity(d, d);
  for (int j : indices) out = out * majorana_operator(j, modes);
  return out;
}

// Accepts "1.047", "pi", "pi/3", "2pi/3", "2*pi/3", "-pi/4".
double parse_angle(std::string text) {
  text.erase(std::remove(text.begin(), text.end(), '*'), text.end());
  const auto pos = text.find("pi");
  if (pos == std::string::npos) return std::stod(text);
  const std::string head = text.substr(0, pos);
  const std::string tail = text.substr(pos + 2);
  double coeff = 1.0;
  if (head == "-") {
    coeff = -1.0;
  } else if (!head.empty() && head != "+") {
    coeff = std::stod(head);
  }
  double denom = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') throw std::invalid_argument("cannot parse angle '" + text + "'");
    denom = std::stod(tail.substr(1));
  }
  return coeff * std::numbers::pi / denom;
}

}  // namespace

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kR: return "R";
    case GateKind::kT: return "T";
    case GateKind::kLambda: return "Lambda";
    case GateKind::kParityProjection: return "ParityProjection";
    case GateKind::kInitPair: return "InitPair";
    case GateKind::kPairMeasure: return "PairMeasure";
  }
  return "unknown";
}

GateKind gate_kind_from_string(std::string_view name) {
  if (name == "R") return GateKind::kR;
  if (name == "T") return GateKind::kT;
  if (name == "Lambda") return GateKind::kLambda;
  if (name == "ParityProjection") return GateKind::kParityProjection;
  if (name == "InitPair") return GateKind::kInitPair;
  if (name == "PairMeasure") return GateKind::kPairMeasure;
  throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

int gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::kLambda:
    case GateKind::kParityProjection: return 4;
    default: return 2;
  }
}

void validate_gate(const GateSpec& spec, int majorana_count) {
  if (majorana_count < 2 || majorana_count % 2 != 0) {
    throw std::invalid_argument("Majorana mode count must be even and >= 2");
  }
  if (static_cast<int>(spec.modes.size()) != gate_arity(spec.kind)) {
    throw std::invalid_argument(std::string(to_string(spec.kind)) + " takes " +
                                std::to_string(gate_arity(spec.kind)) + " Majorana indices, got " +
                                std::to_string(spec.modes.size()));
  }
  for (std::size_t a = 0; a < spec.modes.size(); ++a) {
    if (spec.modes[a] < 1 || spec.modes[a] > majorana_count) {
      throw std::invalid_argument("Majorana index " + std::to_string(spec.modes[a]) +
                                  " out of range [1, " + std::to_string(majorana_count) + "]");
    }
    for (std::size_t b = a + 1; b < spec.modes.size(); ++b) {
      if (spec.modes[a] == spec.modes[b]) throw std::invalid_argument("repeated Majorana index");
    }
  }
}

Matrix gate_unitary(const GateSpec& spec, int majorana_count) {
  validate_gate(spec, majorana_count);
  const int m = majorana_count / 2;
  const Eigen::Index d = Eigen::Index{1} << m;
  const Matrix id = Matrix::Identity(d, d);
  const Matrix p = majorana_product(spec.modes, m);
  switch (spec.kind) {
    case GateKind::kR: return (id + p) / std::numbers::sqrt2;
    case GateKind::kT:
      // (c_i c_j)^2 = -1, so exp(theta c_i c_j) = cos(theta) + sin(theta) c_i c_j.
      return std::cos(std::numbers::pi / 8) * id + std::sin(std::numbers::pi / 8) * p;
    case GateKind::kLambda:
      // (c_i c_j c_k c_q)^2 = +1.
      return std::cos(std::numbers::pi / 4) * id + kI * std::sin(std::numbers::pi / 4) * p;
    default:
      throw std::invalid_argument(std::string(to_string(spec.kind)) + " is not a unitary gate");
  }
}

ProcessRep gate_channel(const GateSpec& spec, int majorana_count) {
  return ProcessRep::Unitary(gate_unitary(spec, majorana_count));
}

Matrix circuit_unitary(const Circuit& circuit, int majorana_count) {
  const Eigen::Index d = Eigen::Index{1} << (majorana_count / 2);
  Matrix u = Matrix::Identity(d, d);
  for (const auto& g : circuit) u = gate_unitary(g, majorana_count) * u;
  return u;
}

std::array<Matrix, 2> parity_projectors(const GateSpec& spec, int majorana_count) {
  if (spec.kind != GateKind::kParityProjection) {
    throw std::invalid_argument("parity_projectors needs a ParityProjection spec");
  }
  validate_gate(spec, majorana_count);
  const int m = majorana_count / 2;
  const Eigen::Index d = Eigen::Index{1} << m;
  const Matrix id = Matrix::Identity(d, d);
  const Matrix p = majorana_product(spec.modes, m);
  return {(id + p) / 2.0, (id - p) / 2.0};
}

std::array<ProcessRep, 2> parity_projection_maps(const GateSpec& spec, int majorana_count) {
  auto pi = parity_projectors(spec, majorana_count);
  return {ProcessRep::FromKraus({pi[0]}), ProcessRep::FromKraus({pi[1]})};
}

Matrix init_pair_state(int pairs) {
  if (pairs < 1) throw std::invalid_argument("init_pair_state: need at least one pair");
  const Eigen::Index d = Eigen::Index{1} << pairs;
  Matrix rho = Matrix::Identity(d, d);
  for (int i = 1; i <= pairs; ++i) {
    rho = rho * (Matrix::Identity(d, d) +
                 kI * majorana_operator(2 * i - 1, pairs) * majorana_operator(2 * i, pairs)) /
          2.0;
  }
  return rho;
}

std::vector<int> outcome_signs(int outcome, int pairs) {
  std::vector<int> eta(static_cast<std::size_t>(pairs));
  for (int i = 0; i < pairs; ++i) eta[i] = ((outcome >> (pairs - 1 - i)) & 1) ? -1 : 1;
  return eta;
}

FermionPOVM pairwise_measurement_povm(int pairs) {
  if (pairs < 1) throw std::invalid_argument("pairwise_measurement_povm: need at least one pair");
  const Eigen::Index d = Eigen::Index{1} << pairs;
  std::vector<Matrix> elements;
  for (int o = 0; o < (1 << pairs); ++o) {
    const auto eta = outcome_signs(o, pairs);
    Matrix e = Matrix::Identity(d, d);
    for (int i = 1; i <= pairs; ++i) {
      e = e * (Matrix::Identity(d, d) + static_cast<double>(eta[i - 1]) * kI *
                                            majorana_operator(2 * i - 1, pairs) *
                                            majorana_operator(2 * i, pairs)) /
          2.0;
    }
    elements.push_back(std::move(e));
  }
  return FermionPOVM(std::move(elements));
}

Matrix pair_observable(unsigned n, int pairs) {
  const Eigen::Index d = Eigen::Index{1} << pairs;
  Matrix q = Matrix::Identity(d, d);
  for (int i = 1; i <= pairs; ++i) {
    if ((n >> (pairs - i)) & 1u) {
      q = q * (kI * majorana_operator(2 * i - 1, pairs) * majorana_operator(2 * i, pairs));
    }
  }
  return q;
}

double pair_observable_expectation(unsigned n, int pairs, const std::vector<double>& probs) {
  if (probs.size() != (std::size_t{1} << pairs)) {
    throw std::invalid_argument("distribution size does not match the pair count");
  }
  double sum = 0.0;
  for (int o = 0; o < (1 << pairs); ++o) {
    const auto eta = outcome_signs(o, pairs);
    int sign = 1;
    for (int i = 1; i <= pairs; ++i) {
      if ((n >> (pairs - i)) & 1u) sign *= eta[i - 1];
    }
    sum += sign * probs[o];
  }
  return sum;
}

ProcessRep builtin_map(std::string_view name, int modes) {
  const int count = 2 * modes;
  if (name == "identity") return ProcessRep::Identity(modes);
  if (name == "R") return gate_channel({GateKind::kR, {1, 2}}, count);
  if (name == "T") return gate_channel({GateKind::kT, {1, 2}}, count);
  if (name == "Lambda") {
    if (modes < 2) throw std::invalid_argument("Lambda needs at least 2 modes");
    return gate_channel({GateKind::kLambda, {1, 2, 3, 4}}, count);
  }
  if (name == "parity-flip") {
    const Matrix a = annihilation_operator(1, modes);
    return ProcessRep::FromKraus({a, Matrix(a.adjoint())});
  }
  if (name.starts_with("phase:")) {
    const double angle = parse_angle(std::string(name.substr(6)));
    const Matrix a = annihilation_operator(1, modes);
    return ProcessRep::Unitary(unitary_from_hermitian(-angle * (a.adjoint() * a)));
  }
  if (name.starts_with("random:")) {
    const auto seed = std::stoull(std::string(name.substr(7)));
    return random_valid_map(modes, seed, RandomMapKind::kCptp);
  }
  throw std::invalid_argument("unknown built-in map '" + std::string(name) + "'");
}

}  // namespace fermitomo
