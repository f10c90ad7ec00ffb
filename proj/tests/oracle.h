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

// Dense reference constructions built directly from Pauli matrices. Tests
// compare the library against these rather than against itself.

#ifndef FERMITOMO_TESTS_ORACLE_H_
#define FERMITOMO_TESTS_ORACLE_H_

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;

inline Mat pauli(char p) {
  Mat m(2, 2);
  switch (p) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m = Mat::Identity(2, 2);
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

/// c_j on m modes: mode 1 is the leftmost tensor factor; c_{2i-1} = X_i and
/// c_{2i} = Y_i, each followed by Z on every later mode.
inline Mat majorana(int j, int m) {
  const int mode = (j - 1) / 2;
  Mat out = Mat::Identity(1, 1);
  for (int k = 0; k < m; ++k) {
    char p = 'I';
    if (k == mode) p = (j % 2 == 1) ? 'X' : 'Y';
    if (k > mode) p = 'Z';
    out = kron(out, pauli(p));
  }
  return out;
}

/// C_u = i^{floor(|u|/2)} prod_j c_j^{u_j} with u_1 the most significant of
/// 2m bits of `label`.
inline Mat product(std::uint64_t label, int m) {
  const int n = 2 * m;
  const Eigen::Index d = Eigen::Index{1} << m;
  Mat out = Mat::Identity(d, d);
  int weight = 0;
  for (int j = 1; j <= n; ++j) {
    if ((label >> (n - j)) & 1u) {
      out = out * majorana(j, m);
      ++weight;
    }
  }
  static const Complex kPow[4] = {1.0, Complex(0, 1), -1.0, Complex(0, -1)};
  return kPow[(weight / 2) % 4] * out;
}

inline int weight(std::uint64_t label) { return __builtin_popcountll(label); }

inline Mat parity(int m) {
  const Eigen::Index d = Eigen::Index{1} << m;
  Mat c = Mat::Zero(d, d);
  for (Eigen::Index n = 0; n < d; ++n) c(n, n) = (__builtin_popcountll(static_cast<std::uint64_t>(n)) % 2 == 0) ? 1.0 : -1.0;
  return c;
}

inline Mat apply_kraus(const std::vector<Mat>& kraus, const Mat& x) {
  Mat out = Mat::Zero(x.rows(), x.cols());
  for (const auto& k : kraus) out += k * x * k.adjoint();
  return out;
}

/// M_{u,v} = 2^{-m} Tr[C_u M(C_v)] from a Kraus set.
inline RMat transfer(const std::vector<Mat>& kraus, int m) {
  const Eigen::Index n = Eigen::Index{1} << (2 * m);
  const double d = static_cast<double>(Eigen::Index{1} << m);
  std::vector<Mat> c;
  for (Eigen::Index u = 0; u < n; ++u) c.push_back(product(static_cast<std::uint64_t>(u), m));
  RMat out(n, n);
  for (Eigen::Index v = 0; v < n; ++v) {
    const Mat mv = apply_kraus(kraus, c[static_cast<std::size_t>(v)]);
    for (Eigen::Index u = 0; u < n; ++u) out(u, v) = (c[static_cast<std::size_t>(u)] * mv).trace().real() / d;
  }
  return out;
}

/// Kraus operator K on the first m of m + extra modes: the even part acts as
/// K (x) 1 and the odd part as K (x) Z...Z, which is what zero-padding the
/// Majorana labels amounts to in this ordering.
inline Mat pad_operator(const Mat& k, int m, int extra) {
  const Mat c = parity(m);
  const Mat even = 0.5 * (k + c * k * c);
  const Mat odd = 0.5 * (k - c * k * c);
  Mat ones = Mat::Identity(1, 1);
  Mat zs = Mat::Identity(1, 1);
  for (int i = 0; i < extra; ++i) {
    ones = kron(ones, pauli('I'));
    zs = kron(zs, pauli('Z'));
  }
  return kron(even, ones) + kron(odd, zs);
}

/// Indices of labels with even (odd) weight in increasing order.
inline std::vector<Eigen::Index> labels_of_parity(int m, int parity_bit) {
  std::vector<Eigen::Index> out;
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << (2 * m)); ++u) {
    if (weight(u) % 2 == parity_bit) out.push_back(static_cast<Eigen::Index>(u));
  }
  return out;
}

inline RMat block(const RMat& x, const std::vector<Eigen::Index>& idx) {
  RMat out(static_cast<Eigen::Index>(idx.size()), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = x(idx[i], idx[j]);
  }
  return out;
}

inline double max_abs(const Mat& x) { return x.size() ? x.cwiseAbs().maxCoeff() : 0.0; }
inline double max_abs(const RMat& x) { return x.size() ? x.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace oracle

#endif  // FERMITOMO_TESTS_ORACLE_H_
