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

#include <gtest/gtest.h>

#include "fermitomo/linalg.h"
#include "fermitomo/protocol.h"
#include "oracle.h"

namespace fermitomo {
namespace {

GateSpec r(int i, int j) { return GateSpec{GateKind::kR, {i, j}}; }

TEST(GateSetTest, BaseCasesAreIdentity) {
  EXPECT_EQ(generate_G(1).size(), 1u);
  EXPECT_TRUE(generate_G(1).circuits[0].empty());
  EXPECT_EQ(generate_U(1).size(), 1u);
  EXPECT_TRUE(generate_U(1).circuits[0].empty());
  EXPECT_THROW(generate_G(0), std::invalid_argument);
}

TEST(GateSetTest, SecondLevelCircuits) {
  const GateSet g = generate_G(2);
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g.circuits[0], Circuit{});
  EXPECT_EQ(g.circuits[1], Circuit{r(2, 3)});
  EXPECT_EQ(g.circuits[2], Circuit{r(2, 4)});
  EXPECT_EQ(g.circuits[3], (Circuit{r(2, 3), r(2, 3)}));
  const GateSet u = generate_U(2);
  ASSERT_EQ(u.size(), 3u);
  EXPECT_EQ(u.circuits[1], Circuit{r(3, 2)});
  EXPECT_EQ(u.circuits[2], Circuit{r(4, 2)});
}

TEST(GateSetTest, SizesFollowPowers) {
  for (int k = 1; k <= 4; ++k) {
    EXPECT_EQ(generate_G(k).size(), std::size_t{1} << (2 * (k - 1)));
    EXPECT_EQ(generate_U(k).size(), static_cast<std::size_t>(std::pow(3, k - 1)));
  }
}

TEST(GateSetTest, EveryInverseMeasurementGateIsAPreparationGate) {
  for (int k = 1; k <= 3; ++k) {
    const GateSet g = generate_G(k);
    const GateSet u = generate_U(k);
    std::vector<Matrix> gs;
    for (std::size_t i = 0; i < g.size(); ++i) gs.push_back(g.unitary(i));
    for (std::size_t i = 0; i < u.size(); ++i) {
      const Matrix ui = u.unitary(i);
      bool found = false;
      for (const auto& gm : gs) {
        if (oracle::max_abs(Matrix(ui * gm - Matrix::Identity(ui.rows(), ui.cols()))) < 1e-12) found = true;
      }
      EXPECT_TRUE(found) << "k=" << k << " U index " << i;
      // The circuit-level inverse is in G as well.
      const Matrix inv = circuit_unitary(inverse_circuit(u.circuits[i]), 2 * k);
      EXPECT_LT(oracle::max_abs(Matrix(inv * ui - Matrix::Identity(ui.rows(), ui.cols()))), 1e-12);
    }
  }
}

TEST(GateSetTest, InverseCircuitRejectsNonExchangeGates) {
  EXPECT_THROW(inverse_circuit({GateSpec{GateKind::kT, {1, 2}}}), std::invalid_argument);
}

TEST(PreparedStatesTest, FirstStateHasBothModesOccupied) {
  const auto states = prepared_states(1);
  ASSERT_EQ(states.size(), 4u);
  Matrix expected = Matrix::Zero(4, 4);
  expected(3, 3) = 1.0;
  EXPECT_LT(oracle::max_abs(Matrix(states[0] - expected)), 1e-14);
}

TEST(PreparedStatesTest, RanksAndValidity) {
  for (int m = 1; m <= 2; ++m) {
    const auto states = prepared_states(m);
    EXPECT_EQ(states.size(), std::size_t{1} << (2 * m));
    EXPECT_EQ(numeric_rank(transfer_columns(states)), 1 << (2 * m));
    const double sign = (m + 1) % 2 == 0 ? 1.0 : -1.0;
    for (const auto& s : states) {
      EXPECT_TRUE(validate_state(s).ok());
      EXPECT_LT(oracle::max_abs(Matrix(oracle::parity(m + 1) * s - sign * s)), 1e-13);
    }
  }
}

TEST(MeasurementOperatorsTest, SpanEveryEvenOperator) {
  for (int m = 1; m <= 2; ++m) {
    const auto ops = measurement_operators(m);
    EXPECT_EQ(ops.size(), static_cast<std::size_t>(std::pow(3, m)) << (m + 1));
    const RealMatrix cols = transfer_columns(ops);
    EXPECT_EQ(numeric_rank(cols), 1 << (2 * m + 1));
    for (const auto& l : odd_labels(m + 1)) {
      EXPECT_LT(cols.row(static_cast<Eigen::Index>(l.index())).cwiseAbs().maxCoeff(), 1e-12);
    }
    for (const auto& e : ops) {
      EXPECT_LT(hermiticity_violation(e), 1e-13);
      // Each is +/- a single Majorana product.
      const RealVector v = transfer_vector(e);
      int nonzero = 0;
      for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > 1e-12) {
          ++nonzero;
          EXPECT_NEAR(std::abs(v(i)), std::sqrt(static_cast<double>(1 << (m + 1))), 1e-12);
        }
      }
      EXPECT_EQ(nonzero, 1);
    }
  }
}

TEST(MeasurementOperatorsTest, ConjugationIdentities) {
  const int m = 2;
  const int total = m + 1;
  const Matrix c2m = oracle::majorana(2 * m, total);
  const Matrix ca = oracle::majorana(2 * m + 1, total);
  const Matrix cb = oracle::majorana(2 * m + 2, total);
  const Matrix r1 = gate_unitary(r(2 * m, 2 * m + 1), 2 * total);
  const Matrix r2 = gate_unitary(r(2 * m, 2 * m + 2), 2 * total);
  for (const auto& u : even_labels(m)) {
    const Matrix cu = oracle::product(u.padded(1).index(), total);
    if (u.bit(2 * m)) {
      EXPECT_LT(oracle::max_abs(Matrix(r1 * cu * r1.adjoint() + cu * c2m * ca)), 1e-13) << u.to_string();
    } else {
      const Matrix lhs = r2 * cu * Complex(0, 1) * ca * cb * r2.adjoint();
      EXPECT_LT(oracle::max_abs(Matrix(lhs + cu * Complex(0, 1) * c2m * ca)), 1e-13) << u.to_string();
    }
  }
}

TEST(NoAncillaTest, RankMatchesBound) {
  const NoAncillaResult one = no_ancilla_rank(1);
  EXPECT_EQ(one.rank, 1);
  EXPECT_TRUE(one.closed);
  const NoAncillaResult two = no_ancilla_rank(2);
  EXPECT_EQ(two.bound, 4);
  EXPECT_EQ(two.rank, 4);
  EXPECT_TRUE(two.closed);
}

TEST(NoAncillaTest, OppositeParityStateRaisesRank) {
  Matrix odd = Matrix::Zero(4, 4);
  odd(1, 1) = 1.0;
  const NoAncillaResult r = no_ancilla_rank(2, 10000, {odd});
  EXPECT_EQ(r.rank, 8);
}

TEST(NoAncillaTest, BudgetIsReported) {
  const NoAncillaResult r = no_ancilla_rank(2, 1);
  EXPECT_EQ(r.states_expanded, 1);
  EXPECT_FALSE(r.closed);
}

TEST(CPlusTest, MuSigns) {
  EXPECT_EQ(mu_sign(MajoranaLabel::FromString("00")), 1);
  for (int m = 1; m <= 3; ++m) {
    for (const auto& u : cplus_labels(m)) {
      const int mu = mu_sign(u);
      // mu = C_1 C_u C_{1-u} from dense matrices.
      const Matrix prod = oracle::product(MajoranaLabel::Ones(m).index(), m) * oracle::product(u.index(), m) *
                          oracle::product(u.complement().index(), m);
      const Eigen::Index d = prod.rows();
      EXPECT_LT(oracle::max_abs(Matrix(prod - static_cast<double>(mu) * Matrix::Identity(d, d))), 1e-13);
    }
  }
  EXPECT_THROW(mu_sign(MajoranaLabel::FromString("10")), std::invalid_argument);
}

TEST(CPlusTest, SingleModeExpansion) {
  const CPlusExpansion e = cplus_basis_and_alpha(1, system_states(1));
  ASSERT_EQ(e.labels.size(), 1u);
  EXPECT_EQ(e.mu[0], 1);
  EXPECT_NEAR(e.alpha(0, 0), 2.0, 1e-14);
  EXPECT_LT(e.max_residual, 1e-12);
}

TEST(CPlusTest, TwoModeExpansion) {
  const CPlusExpansion e = cplus_basis_and_alpha(2, system_states(2));
  EXPECT_EQ(e.labels.size(), 4u);
  EXPECT_EQ(e.state_rank, 4);
  EXPECT_LT(e.max_residual, 1e-10);
  EXPECT_THROW(cplus_basis_and_alpha(2, {init_pair_state(2)}), std::invalid_argument);
}

TEST(CPlusTest, PlusAndMinusAreOrthogonal) {
  for (int m = 1; m <= 3; ++m) {
    const auto plus = cplus_elements(m);
    const auto minus = cminus_elements(m);
    EXPECT_EQ(plus.size(), std::size_t{1} << (2 * (m - 1)));
    for (const auto& a : plus) {
      for (const auto& b : minus) EXPECT_LT(std::abs((a.adjoint() * b).trace()), 1e-12);
    }
    const RealMatrix both = [&] {
      std::vector<Matrix> all = plus;
      all.insert(all.end(), minus.begin(), minus.end());
      return transfer_columns(all);
    }();
    EXPECT_EQ(numeric_rank(both), 1 << (2 * m - 1));
  }
}

TEST(GhijTest, SingleModeIdentities) {
  const GhijReport r = verify_GHIJ(1);
  EXPECT_EQ(r.admissible_labels, 1);
  EXPECT_TRUE(r.ok());
  EXPECT_LT(r.max_error(), 1e-10);
  // G_00 = 1 + (i c1 c2)(i c3 c4) built independently.
  const Matrix g = Matrix::Identity(4, 4) + (Complex(0, 1) * oracle::majorana(1, 2) * oracle::majorana(2, 2)) *
                                                (Complex(0, 1) * oracle::majorana(3, 2) * oracle::majorana(4, 2));
  const auto states = prepared_states(1);
  EXPECT_LT(oracle::max_abs(Matrix(g - 2.0 * (states[0] + states[3]))), 1e-13);
}

TEST(GhijTest, TwoModeIdentities) {
  const GhijReport r = verify_GHIJ(2);
  EXPECT_EQ(r.admissible_labels, 4);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.operator_rank, 16);
  EXPECT_EQ(r.joint_rank, 16);
}

}  // namespace
}  // namespace fermitomo
