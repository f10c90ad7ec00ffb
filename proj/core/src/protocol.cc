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

#include "fermitomo/protocol.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>

#include "fermitomo/linalg.h"

namespace fermitomo {
namespace {

GateSpec r_gate(int i, int j) { return GateSpec{GateKind::kR, {i, j}}; }

void check_pairs(int k) {
  if (k < 1 || k > kMaxModes) {
    throw std::invalid_argument("number of pairs must be in [1, " + std::to_string(kMaxModes) +
                                "], got " + std::to_string(k));
  }
}

// Incrementally maintained orthonormal basis of real vectors.
class SpanTracker {
 public:
  explicit SpanTracker(Eigen::Index dim) : dim_(dim) {}

  bool add(const RealVector& v) {
    const double norm = v.norm();
    if (norm == 0.0) return false;
    RealVector r = v / norm;
    // Two passes of Gram-Schmidt keep the basis orthonormal to working precision.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis_) r -= b.dot(r) * b;
    }
    const double residual = r.norm();
    if (residual <= kRankThreshold) return false;
    basis_.push_back(r / residual);
    return true;
  }

  int rank() const { return static_cast<int>(basis_.size()); }
  bool full() const { return static_cast<Eigen::Index>(basis_.size()) >= dim_; }

 private:
  Eigen::Index dim_;
  std::vector<RealVector> basis_;
};

}  // namespace

Matrix GateSet::unitary(std::size_t index, int majorana_count) const {
  if (index >= circuits.size()) {
    throw std::out_of_range("gate index " + std::to_string(index) + " out of range for a set of " +
                            std::to_string(circuits.size()));
  }
  if (majorana_count < 2 * pairs) {
    throw std::invalid_argument("gate set on " + std::to_string(2 * pairs) +
                                " Majorana modes cannot act on " + std::to_string(majorana_count));
  }
  return circuit_unitary(circuits[index], majorana_count);
}

GateSet generate_G(int k) {
  check_pairs(k);
  GateSet set{1, {Circuit{}}};
  for (int p = 1; p < k; ++p) {
    const int a = 2 * p;
    GateSet next{p + 1, {}};
    next.circuits.reserve(4 * set.size());
    for (const auto& g : set.circuits) {
      next.circuits.push_back(g);
      for (const Circuit& s : {Circuit{r_gate(a, a + 1)}, Circuit{r_gate(a, a + 2)},
                               Circuit{r_gate(a, a + 1), r_gate(a, a + 1)}}) {
        Circuit c = g;
        c.insert(c.end(), s.begin(), s.end());
        next.circuits.push_back(std::move(c));
      }
    }
    set = std::move(next);
  }
  return set;
}

GateSet generate_U(int k) {
  check_pairs(k);
  GateSet set{1, {Circuit{}}};
  for (int p = 1; p < k; ++p) {
    const int a = 2 * p;
    GateSet next{p + 1, {}};
    next.circuits.reserve(3 * set.size());
    for (const auto& u : set.circuits) {
      next.circuits.push_back(u);
      for (const GateSpec& inv : {r_gate(a + 1, a), r_gate(a + 2, a)}) {
        Circuit c{inv};
        c.insert(c.end(), u.begin(), u.end());
        next.circuits.push_back(std::move(c));
      }
    }
    set = std::move(next);
  }
  return set;
}

Circuit inverse_circuit(const Circuit& circuit) {
  Circuit out;
  out.reserve(circuit.size());
  for (auto it = circuit.rbegin(); it != circuit.rend(); ++it) {
    if (it->kind != GateKind::kR || it->modes.size() != 2) {
      throw std::invalid_argument("inverse_circuit supports exchange gates only, got " +
                                  std::string(to_string(it->kind)));
    }
    out.push_back(r_gate(it->modes[1], it->modes[0]));
  }
  return out;
}

std::vector<Matrix> prepared_states(int m) {
  check_pairs(m + 1);
  const GateSet g = generate_G(m + 1);
  const Matrix rho = init_pair_state(m + 1);
  std::vector<Matrix> out;
  out.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Matrix u = g.unitary(i);
    out.push_back(u * rho * u.adjoint());
  }
  return out;
}

std::vector<Matrix> measurement_operators(int m) {
  check_pairs(m + 1);
  const GateSet us = generate_U(m + 1);
  const unsigned outcomes = 1u << (m + 1);
  std::vector<Matrix> q;
  for (unsigned n = 0; n < outcomes; ++n) q.push_back(pair_observable(n, m + 1));
  std::vector<Matrix> out;
  out.reserve(us.size() * outcomes);
  for (std::size_t i = 0; i < us.size(); ++i) {
    const Matrix u = us.unitary(i);
    for (const auto& qn : q) out.push_back(u.adjoint() * qn * u);
  }
  return out;
}

RealMatrix transfer_columns(const std::vector<Matrix>& ops) {
  if (ops.empty()) return RealMatrix();
  const Eigen::Index rows = ops.front().rows() * ops.front().rows();
  RealMatrix out(rows, static_cast<Eigen::Index>(ops.size()));
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].rows() * ops[i].rows() != rows) {
      throw std::invalid_argument("transfer_columns: operators of different dimensions");
    }
    out.col(static_cast<Eigen::Index>(i)) = transfer_vector(ops[i]);
  }
  return out;
}

NoAncillaResult no_ancilla_rank(int m, int budget, const std::vector<Matrix>& extra_initial_states) {
  check_pairs(m);
  const int count = 2 * m;
  const Eigen::Index dim = Eigen::Index{1} << m;

  std::vector<Matrix> unitaries;
  std::vector<Matrix> projectors;
  for (int i = 1; i <= count; ++i) {
    for (int j = 1; j <= count; ++j) {
      if (i != j) unitaries.push_back(gate_unitary(GateSpec{GateKind::kR, {i, j}}, count));
    }
  }
  for (int i = 1; i <= count; ++i) {
    for (int j = 1; j <= count; ++j) {
      if (i != j) unitaries.push_back(gate_unitary(GateSpec{GateKind::kT, {i, j}}, count));
    }
  }
  for (int a = 1; a <= count; ++a) {
    for (int b = a + 1; b <= count; ++b) {
      for (int c = b + 1; c <= count; ++c) {
        for (int d = c + 1; d <= count; ++d) {
          const GateSpec spec{GateKind::kLambda, {a, b, c, d}};
          unitaries.push_back(gate_unitary(spec, count));
          const auto pis = parity_projectors(GateSpec{GateKind::kParityProjection, {a, b, c, d}}, count);
          projectors.push_back(pis[0]);
          projectors.push_back(pis[1]);
        }
      }
    }
  }

  NoAncillaResult result;
  result.bound = 1 << (2 * (m - 1));
  SpanTracker span(dim * dim);
  std::deque<Matrix> queue;
  auto offer = [&](const Matrix& rho) {
    if (span.add(transfer_vector(rho, 1e-8))) queue.push_back(rho);
  };
  offer(init_pair_state(m));
  for (const auto& rho : extra_initial_states) {
    if (rho.rows() != dim) {
      throw std::invalid_argument("extra initial state has dimension " + std::to_string(rho.rows()) +
                                  ", expected " + std::to_string(dim));
    }
    offer(rho);
  }

  while (!queue.empty() && result.states_expanded < budget) {
    const Matrix rho = std::move(queue.front());
    queue.pop_front();
    ++result.states_expanded;
    for (const auto& u : unitaries) offer(u * rho * u.adjoint());
    for (const auto& pi : projectors) {
      Matrix out = pi * rho * pi;
      const double tr = out.trace().real();
      if (tr > 1e-12) offer(out / tr);
    }
  }
  result.rank = span.rank();
  result.closed = queue.empty();
  return result;
}

std::vector<MajoranaLabel> cplus_labels(int m) {
  check_pairs(m);
  std::vector<MajoranaLabel> out;
  for (const auto& l : even_labels(m)) {
    if (!l.bit(2 * m)) out.push_back(l);
  }
  return out;
}

int mu_sign(const MajoranaLabel& u) {
  if (!u.is_even()) throw std::invalid_argument("mu_sign requires an even label, got " + u.to_string());
  const PhasedLabel p = product(MajoranaLabel::Ones(u.modes()), u);
  if (!p.phase.is_real()) {
    throw std::logic_error("C_1 C_u has non-real phase for u = " + u.to_string());
  }
  return p.phase.sign();
}

namespace {

std::vector<Matrix> cpm_elements(int m, int sign) {
  const int d = 1 << m;
  const Matrix c = (m % 2 == 0 ? 1.0 : -1.0) * sign * parity_operator(m);
  std::vector<Matrix> out;
  for (const auto& u : cplus_labels(m)) {
    out.push_back((Matrix::Identity(d, d) + c) * dense(u));
  }
  return out;
}

}  // namespace

std::vector<Matrix> cplus_elements(int m) { return cpm_elements(m, 1); }
std::vector<Matrix> cminus_elements(int m) { return cpm_elements(m, -1); }

CPlusExpansion cplus_basis_and_alpha(int m, const std::vector<Matrix>& states) {
  check_pairs(m);
  const int expected = 1 << (2 * (m - 1));
  const RealMatrix a = transfer_columns(states);
  CPlusExpansion out;
  out.state_rank = numeric_rank(a);
  if (out.state_rank < expected) {
    throw std::invalid_argument("states span rank " + std::to_string(out.state_rank) +
                                ", need " + std::to_string(expected));
  }
  out.labels = cplus_labels(m);
  const Eigen::CompleteOrthogonalDecomposition<RealMatrix> solver(a);
  out.alpha.resize(static_cast<Eigen::Index>(out.labels.size()), a.cols());
  for (std::size_t l = 0; l < out.labels.size(); ++l) {
    const MajoranaLabel& u = out.labels[l];
    const int mu = mu_sign(u);
    out.mu.push_back(mu);
    const Matrix target = dense(u) + static_cast<double>(mu) * dense(u.complement());
    const RealVector t = transfer_vector(target);
    const RealVector x = solver.solve(t);
    out.alpha.row(static_cast<Eigen::Index>(l)) = x.transpose();
    out.max_residual = std::max(out.max_residual, (a * x - t).cwiseAbs().maxCoeff());
  }
  return out;
}

std::vector<Matrix> system_states(int m) {
  const GateSet g = generate_G(m);
  const Matrix rho = init_pair_state(m);
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Matrix u = g.unitary(i);
    out.push_back(u * rho * u.adjoint());
  }
  return out;
}

double GhijReport::max_error() const {
  return std::max({max_error_g, max_error_h, max_error_i, max_error_j});
}

bool GhijReport::ok(double tol) const {
  const int expected = 1 << (2 * m);
  return max_error() <= tol && max_alpha_residual <= tol && cplus_cminus_overlap <= tol &&
         operator_rank == expected && state_rank == expected && joint_rank == expected;
}

GhijReport verify_GHIJ(int m) {
  check_pairs(m + 1);
  const int total = m + 1;
  const CPlusExpansion exp = cplus_basis_and_alpha(m, system_states(m));
  const std::vector<Matrix> bar = prepared_states(m);

  GhijReport r;
  r.m = m;
  r.admissible_labels = static_cast<int>(exp.labels.size());
  r.max_alpha_residual = exp.max_residual;

  const Complex i1(0.0, 1.0);
  const Matrix c2m = majorana_operator(2 * m, total);
  const Matrix c1 = majorana_operator(2 * m + 1, total);
  const Matrix c2 = majorana_operator(2 * m + 2, total);
  const Matrix pair = i1 * c1 * c2;
  const Matrix a_term = i1 * c2m * c1;
  const Matrix b_term = c2m * c2;

  std::vector<Matrix> ops;
  for (std::size_t l = 0; l < exp.labels.size(); ++l) {
    const MajoranaLabel& u = exp.labels[l];
    const double mu = exp.mu[l];
    const Matrix cu = dense(u.padded(1));
    const Matrix cv = dense(u.complement().padded(1));
    const Matrix g = cu + mu * cv * pair;
    const Matrix h = cv + mu * cu * pair;
    const Matrix iu = cu * a_term + mu * cv * b_term;
    const Matrix j = cv * c2m * c1 - mu * cu * i1 * b_term;

    Matrix sg = Matrix::Zero(g.rows(), g.cols());
    Matrix sh = sg, si = sg, sj = sg;
    for (Eigen::Index s = 0; s < exp.alpha.cols(); ++s) {
      const double al = exp.alpha(static_cast<Eigen::Index>(l), s);
      const Matrix& r1 = bar[4 * s];
      const Matrix& r2 = bar[4 * s + 1];
      const Matrix& r3 = bar[4 * s + 2];
      const Matrix& r4 = bar[4 * s + 3];
      sg += al * (r1 + r4);
      sh += mu * al * (r1 - r4);
      si += al * (r1 + r4 - 2.0 * r3);
      sj += mu * al * (r1 + r4 - 2.0 * r2);
    }
    r.max_error_g = std::max(r.max_error_g, max_abs(Matrix(g - sg)));
    r.max_error_h = std::max(r.max_error_h, max_abs(Matrix(h - sh)));
    r.max_error_i = std::max(r.max_error_i, max_abs(Matrix(iu - si)));
    r.max_error_j = std::max(r.max_error_j, max_abs(Matrix(j - sj)));
    ops.insert(ops.end(), {g, h, iu, j});
  }

  const RealMatrix op_cols = transfer_columns(ops);
  const RealMatrix state_cols = transfer_columns(bar);
  RealMatrix joint(op_cols.rows(), op_cols.cols() + state_cols.cols());
  joint << op_cols, state_cols;
  r.operator_rank = numeric_rank(op_cols);
  r.state_rank = numeric_rank(state_cols);
  r.joint_rank = numeric_rank(joint);

  const auto plus = cplus_elements(m);
  const auto minus = cminus_elements(m);
  for (const auto& a : plus) {
    for (const auto& b : minus) {
      r.cplus_cminus_overlap = std::max(r.cplus_cminus_overlap, std::abs((a.adjoint() * b).trace()));
    }
  }
  return r;
}

}  // namespace fermitomo
