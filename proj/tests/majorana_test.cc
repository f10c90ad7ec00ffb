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

#include <set>

#include "fermitomo/majorana.h"
#include "oracle.h"

namespace fermitomo {
namespace {

TEST(MajoranaLabelTest, StringRoundTripAndBitOrder) {
  const auto u = MajoranaLabel::FromString("1001");
  EXPECT_EQ(u.modes(), 2);
  EXPECT_EQ(u.index(), 9u);
  EXPECT_TRUE(u.bit(1));
  EXPECT_FALSE(u.bit(2));
  EXPECT_TRUE(u.bit(4));
  EXPECT_EQ(u.weight(), 2);
  EXPECT_EQ(u.to_string(), "1001");
  EXPECT_EQ(MajoranaLabel::Single(2, 3).to_string(), "0010");
  EXPECT_EQ(u.complement().to_string(), "0110");
  EXPECT_EQ(MajoranaLabel::FromBits({0, 1, 1, 0}), MajoranaLabel::FromString("0110"));
}

TEST(MajoranaLabelTest, RejectsMalformedInput) {
  EXPECT_THROW(MajoranaLabel::FromString("101"), std::invalid_argument);
  EXPECT_THROW(MajoranaLabel::FromString("10a1"), std::invalid_argument);
  EXPECT_THROW(MajoranaLabel(1, 4), std::invalid_argument);
  EXPECT_THROW(MajoranaLabel::Single(1, 3), std::out_of_range);
  EXPECT_THROW(MajoranaLabel::FromString("10") + MajoranaLabel::FromString("1000"), std::invalid_argument);
}

TEST(MajoranaLabelTest, EmbeddingPlacesBits) {
  const auto u = MajoranaLabel::FromString("11");
  EXPECT_EQ(u.embedded(0, 3).to_string(), "110000");
  EXPECT_EQ(u.embedded(1, 3).to_string(), "001100");
  EXPECT_EQ(u.padded(1).to_string(), "1100");
}

TEST(MajoranaLabelTest, EnumerationsAreLexicographic) {
  const auto all = all_labels(2);
  ASSERT_EQ(all.size(), 16u);
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i].index(), i);
  const auto even = even_labels(2);
  const auto odd = odd_labels(2);
  EXPECT_EQ(even.size(), 8u);
  EXPECT_EQ(odd.size(), 8u);
  for (const auto& l : even) EXPECT_TRUE(l.is_even());
  for (const auto& l : odd) EXPECT_FALSE(l.is_even());
  EXPECT_TRUE(std::is_sorted(even.begin(), even.end()));
}

TEST(PhaseTest, GroupArithmetic) {
  EXPECT_EQ(Phase::I() * Phase::I(), Phase::MinusOne());
  EXPECT_EQ(Phase::MinusI().conj(), Phase::I());
  EXPECT_TRUE(Phase::MinusOne().is_real());
  EXPECT_EQ(Phase::MinusOne().sign(), -1);
  EXPECT_FALSE(Phase::I().is_real());
  EXPECT_EQ(Phase::FromQuarterTurns(-1), Phase::MinusI());
  EXPECT_EQ(Phase::I().value(), Complex(0.0, 1.0));
}

TEST(DenseTest, MatchesPauliConstruction) {
  for (int m = 1; m <= 3; ++m) {
    for (const auto& u : all_labels(m)) {
      EXPECT_LT(oracle::max_abs(Matrix(dense(u) - oracle::product(u.index(), m))), 1e-14)
          << "m=" << m << " u=" << u.to_string();
    }
  }
}

TEST(DenseTest, ProductsAreHermitianInvolutions) {
  for (const auto& u : all_labels(2)) {
    const Matrix c = dense(u);
    EXPECT_LT(oracle::max_abs(Matrix(c - c.adjoint())), 1e-14);
    EXPECT_LT(oracle::max_abs(Matrix(c * c - Matrix::Identity(4, 4))), 1e-14);
  }
}

TEST(ProductTest, AgreesWithMatrixMultiplicationForAllPairs) {
  for (int m = 1; m <= 3; ++m) {
    for (const auto& a : all_labels(m)) {
      const Matrix ca = oracle::product(a.index(), m);
      for (const auto& b : all_labels(m)) {
        const PhasedLabel p = product(a, b);
        EXPECT_EQ(p.label, a + b);
        const Matrix lhs = ca * oracle::product(b.index(), m);
        const Matrix rhs = p.phase.value() * oracle::product(p.label.index(), m);
        ASSERT_LT(oracle::max_abs(Matrix(lhs - rhs)), 1e-12) << a.to_string() << " * " << b.to_string();
      }
    }
  }
}

TEST(ProductTest, KnownPhases) {
  // c_1 c_2 = -i (i c_1 c_2).
  EXPECT_EQ(product(MajoranaLabel::FromString("10"), MajoranaLabel::FromString("01")).phase, Phase::MinusI());
  // c_2 c_1 = i (i c_1 c_2).
  EXPECT_EQ(product(MajoranaLabel::FromString("01"), MajoranaLabel::FromString("10")).phase, Phase::I());
  // C_u C_u = 1.
  const auto u = MajoranaLabel::FromString("1101");
  EXPECT_EQ(product(u, u).phase, Phase::One());
  EXPECT_EQ(product(u, u).label, MajoranaLabel::Zero(2));
}

TEST(CommutationTest, SignFormulaMatchesDense) {
  for (int m = 1; m <= 3; ++m) {
    for (const auto& a : all_labels(m)) {
      const Matrix ca = dense(a);
      for (const auto& b : all_labels(m)) {
        const Matrix cb = dense(b);
        const int s = commutation_sign(a, b);
        ASSERT_LT(oracle::max_abs(Matrix(ca * cb - static_cast<double>(s) * cb * ca)), 1e-12);
      }
    }
  }
}

TEST(AlgebraTest, AnticommutationAndTraceOrthogonality) {
  for (int m = 1; m <= 3; ++m) {
    const Eigen::Index d = Eigen::Index{1} << m;
    for (int i = 1; i <= 2 * m; ++i) {
      for (int j = 1; j <= 2 * m; ++j) {
        const Matrix ci = majorana_operator(i, m);
        const Matrix cj = majorana_operator(j, m);
        const Matrix expected = (i == j ? 2.0 : 0.0) * Matrix::Identity(d, d);
        EXPECT_LT(oracle::max_abs(Matrix(ci * cj + cj * ci - expected)), 1e-12);
      }
    }
    for (const auto& a : all_labels(m)) {
      for (const auto& b : all_labels(m)) {
        const Complex tr = (dense(a) * dense(b)).trace();
        EXPECT_NEAR(std::abs(tr - Complex(a == b ? static_cast<double>(d) : 0.0)), 0.0, 1e-12);
      }
    }
  }
}

TEST(MonomialTest, MultiplicationsMatchDense) {
  const int m = 3;
  Matrix x = Matrix::Random(8, 8);
  for (const auto& u : all_labels(m)) {
    const MonomialOperator op = monomial(u);
    const Matrix c = dense(u);
    EXPECT_LT(oracle::max_abs(Matrix(op.left_multiply(x) - c * x)), 1e-13) << u.to_string();
    EXPECT_LT(oracle::max_abs(Matrix(op.right_multiply(x) - x * c)), 1e-13) << u.to_string();
    EXPECT_LT(std::abs(op.trace_with(x) - (c * x).trace()), 1e-12);
  }
}

TEST(FockTest, AnnihilationActsWithJordanWignerSigns) {
  // a_i |n> = (-1)^{n_{i+1} + ... + n_m} |n - e_i> when n_i = 1.
  const int m = 3;
  for (int i = 1; i <= m; ++i) {
    const Matrix a = annihilation_operator(i, m);
    for (std::uint64_t n = 0; n < 8; ++n) {
      const std::uint64_t bit = std::uint64_t{1} << (m - i);
      Vector ket = Vector::Zero(8);
      ket(static_cast<Eigen::Index>(n)) = 1.0;
      const Vector out = a * ket;
      if ((n & bit) == 0) {
        EXPECT_LT(out.cwiseAbs().maxCoeff(), 1e-14);
        continue;
      }
      const std::uint64_t after = n & (bit - 1);
      const double sign = (__builtin_popcountll(after) % 2 == 0) ? 1.0 : -1.0;
      Vector expected = Vector::Zero(8);
      expected(static_cast<Eigen::Index>(n ^ bit)) = sign;
      EXPECT_LT((out - expected).cwiseAbs().maxCoeff(), 1e-14) << "i=" << i << " n=" << n;
    }
  }
}

TEST(FockTest, CanonicalAnticommutation) {
  const int m = 3;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      const Matrix ai = annihilation_operator(i, m);
      const Matrix aj = annihilation_operator(j, m);
      const Matrix expected = (i == j ? 1.0 : 0.0) * Matrix::Identity(8, 8);
      EXPECT_LT(oracle::max_abs(Matrix(ai * aj.adjoint() + aj.adjoint() * ai - expected)), 1e-13);
      EXPECT_LT(oracle::max_abs(Matrix(ai * aj + aj * ai)), 1e-13);
    }
  }
}

TEST(FockTest, ParityOperatorIsProductOfPairs) {
  for (int m = 1; m <= 3; ++m) {
    const Eigen::Index d = Eigen::Index{1} << m;
    Matrix c = Matrix::Identity(d, d);
    for (int i = 1; i <= m; ++i) {
      c = c * (Complex(0.0, -1.0) * majorana_operator(2 * i - 1, m) * majorana_operator(2 * i, m));
    }
    EXPECT_LT(oracle::max_abs(Matrix(parity_operator(m) - c)), 1e-13);
    EXPECT_LT(oracle::max_abs(Matrix(parity_operator(m) - oracle::parity(m))), 1e-13);
  }
  EXPECT_EQ(fock_parity(0b101), 1);
  EXPECT_EQ(fock_parity(0b100), -1);
}

TEST(FockTest, ModesFromDimension) {
  EXPECT_EQ(modes_from_dimension(8), 3);
  EXPECT_THROW(modes_from_dimension(6), std::invalid_argument);
  EXPECT_THROW(modes_from_dimension(1), std::invalid_argument);
}

}  // namespace
}  // namespace fermitomo
