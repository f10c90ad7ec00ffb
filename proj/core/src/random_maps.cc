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

#include "fermitomo/random_maps.h"

#include <random>

#include "fermitomo/linalg.h"

namespace fermitomo {

namespace {

Matrix ginibre(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

ProcessRep random_unitary(int m, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const Eigen::Index d = Eigen::Index{1} << m;
  Matrix h = Matrix::Zero(d, d);
  for (const auto& l : even_labels(m)) {
    if (l.index() == 0) continue;
    h += normal(rng) * dense(l);
  }
  return ProcessRep::Unitary(unitary_from_hermitian(h));
}

ProcessRep random_cptp(int m, std::mt19937_64& rng) {
  const auto even = even_labels(m);
  const auto odd = odd_labels(m);
  const auto n = static_cast<Eigen::Index>(even.size());
  const Eigen::Index size = Eigen::Index{1} << (2 * m);
  Matrix chi = Matrix::Zero(size, size);
  const Matrix a = ginibre(n, n, rng);
  const Matrix b = ginibre(n, n, rng);
  const Matrix even_block = a * a.adjoint();
  const Matrix odd_block = b * b.adjoint();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      chi(static_cast<Eigen::Index>(even[i].index()), static_cast<Eigen::Index>(even[j].index())) =
          even_block(i, j);
      chi(static_cast<Eigen::Index>(odd[i].index()), static_cast<Eigen::Index>(odd[j].index())) =
          odd_block(i, j);
    }
  }
  chi /= chi.trace().real();

  // Every Kraus operator has definite parity, so S = sum F^dag F is even and
  // F S^{-1/2} keeps the superselection structure.
  std::vector<Matrix> kraus = kraus_operators(ProcessRep::FromChi(chi));
  const Eigen::Index d = Eigen::Index{1} << m;
  Matrix s = Matrix::Zero(d, d);
  for (const auto& f : kraus) s += f.adjoint() * f;
  const Matrix correction = inverse_sqrt(s);
  for (auto& f : kraus) f = f * correction;
  return ProcessRep::FromKraus(std::move(kraus));
}

}  // namespace

ProcessRep random_valid_map(int modes, std::uint64_t seed, RandomMapKind kind) {
  if (modes < 1) throw std::invalid_argument("random_valid_map: modes must be >= 1");
  std::mt19937_64 rng(seed);
  switch (kind) {
    case RandomMapKind::kUnitary: return random_unitary(modes, rng);
    case RandomMapKind::kCptp: return random_cptp(modes, rng);
  }
  throw std::logic_error("unreachable");
}

Matrix random_valid_state(int modes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Eigen::Index d = Eigen::Index{1} << modes;
  const Matrix g = ginibre(d, d, rng);
  Matrix rho = sr_project(g * g.adjoint());
  rho /= rho.trace().real();
  return rho;
}

Matrix random_hermitian_unit_trace(int modes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Eigen::Index d = Eigen::Index{1} << modes;
  const Matrix g = ginibre(d, d, rng);
  Matrix h = 0.5 * (g + g.adjoint());
  h += (Complex(1.0) - h.trace()) / static_cast<double>(d) * Matrix::Identity(d, d);
  return h;
}

}  // namespace fermitomo
