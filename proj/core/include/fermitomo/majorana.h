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

#ifndef FERMITOMO_MAJORANA_H_
#define FERMITOMO_MAJORANA_H_

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace fermitomo {

using Complex = std::complex<double>;
/// Dense complex operator on a Fock space (states, POVM elements, Kraus
/// operators, Choi and chi matrices).
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Entrywise absolute tolerance used for operator identities.
inline constexpr double kDefaultTolerance = 1e-10;

/// Largest supported fermion-mode count (labels are packed into 64 bits and
/// dense matrices grow as 2^m).
inline constexpr int kMaxModes = 16;

/// Exact element of {1, i, -1, -i}, stored as a power of i.
class Phase {
 public:
  constexpr Phase() = default;
  static constexpr Phase FromQuarterTurns(int k) { return Phase(((k % 4) + 4) % 4); }
  static constexpr Phase One() { return Phase(0); }
  static constexpr Phase I() { return Phase(1); }
  static constexpr Phase MinusOne() { return Phase(2); }
  static constexpr Phase MinusI() { return Phase(3); }

  constexpr int quarter_turns() const { return k_; }
  constexpr bool is_real() const { return k_ % 2 == 0; }
  /// +1 or -1; only meaningful when is_real().
  constexpr int sign() const { return k_ == 0 ? 1 : -1; }
  Complex value() const;
  std::string to_string() const;

  constexpr Phase operator*(Phase o) const { return FromQuarterTurns(k_ + o.k_); }
  constexpr Phase conj() const { return FromQuarterTurns(-k_); }
  constexpr bool operator==(const Phase&) const = default;

 private:
  constexpr explicit Phase(int k) : k_(k) {}
  int k_ = 0;
};

/// Binary vector u = (u_1, ..., u_{2m}) selecting the Majorana product
///   C_u = i^{floor(|u|/2)} c_1^{u_1} c_2^{u_2} ... c_{2m}^{u_{2m}}.
///
/// The label is packed into an integer with u_1 as the most significant of
/// 2m bits, so `index()` is also the lexicographic position of the label and
/// the row/column index used by every chi and transfer matrix.
class MajoranaLabel {
 public:
  MajoranaLabel(int modes, std::uint64_t index);

  /// Parses a string of '0'/'1' of length 2m ("1001" -> c_1 c_4 on 2 modes).
  static MajoranaLabel FromString(std::string_view bits);
  static MajoranaLabel FromBits(const std::vector<int>& bits);
  static MajoranaLabel Zero(int modes) { return MajoranaLabel(modes, 0); }
  static MajoranaLabel Ones(int modes);
  /// Single Majorana operator c_j, j in [1, 2m].
  static MajoranaLabel Single(int modes, int j);

  int modes() const { return modes_; }
  int majorana_count() const { return 2 * modes_; }
  std::uint64_t index() const { return index_; }

  /// u_j for j in [1, 2m].
  bool bit(int j) const;
  int weight() const;
  bool is_even() const { return weight() % 2 == 0; }
  /// Bits of 1-bar minus u.
  MajoranaLabel complement() const;
  /// Same operator on a larger system of `total_modes` modes, placed so that
  /// its first fermion mode is `first_mode` (0-based); other bits are zero.
  MajoranaLabel embedded(int first_mode, int total_modes) const;
  /// Zero-padded onto `extra_modes` additional trailing modes.
  MajoranaLabel padded(int extra_modes) const { return embedded(0, modes_ + extra_modes); }

  std::string to_string() const;

  /// Elementwise sum modulo 2.
  MajoranaLabel operator+(const MajoranaLabel& other) const;
  bool operator==(const MajoranaLabel&) const = default;
  auto operator<=>(const MajoranaLabel& other) const { return index_ <=> other.index_; }

 private:
  int modes_;
  std::uint64_t index_;
};

/// A label together with one of the group phases {+1, -1, +i, -i}.
struct PhasedLabel {
  Phase phase;
  MajoranaLabel label;
};

/// C_a C_b = eta C_{a+b}, with eta computed exactly from swap counts.
PhasedLabel product(const MajoranaLabel& a, const MajoranaLabel& b);

/// (-1)^{|a||b| + a.b}: C_a C_b = sign * C_b C_a.
int commutation_sign(const MajoranaLabel& a, const MajoranaLabel& b);

/// All 4^m labels in lexicographic order.
std::vector<MajoranaLabel> all_labels(int modes);
/// Even-weight labels in lexicographic order (4^m / 2 of them).
std::vector<MajoranaLabel> even_labels(int modes);
std::vector<MajoranaLabel> odd_labels(int modes);

/// An operator with exactly one nonzero entry per column:
///   Op |n> = coeff[n] |target[n]>.
/// Every Majorana product is of this form in the Fock basis, which makes
/// conjugations C_u X C_v cost O(dim^2).
struct MonomialOperator {
  std::vector<std::uint32_t> target;
  std::vector<Complex> coeff;

  Eigen::Index dim() const { return static_cast<Eigen::Index>(target.size()); }
  Matrix dense() const;
  /// Returns this * x.
  Matrix left_multiply(const Matrix& x) const;
  /// Returns x * this.
  Matrix right_multiply(const Matrix& x) const;
  /// Tr(this * x).
  Complex trace_with(const Matrix& x) const;
};

/// Jordan-Wigner representation of C_u on m modes. The Fock basis index is
/// the occupation vector read as a binary number with n_1 most significant;
/// c_{2i-1} = X_i prod_{j>i} Z_j and c_{2i} = Y_i prod_{j>i} Z_j.
MonomialOperator monomial(const MajoranaLabel& label);

/// Same as `monomial`, but with an explicit Z-string for every fermion mode:
/// `string_masks[i]` holds the Fock-index bits of the modes whose parity
/// multiplies c_{2i+1} and c_{2i+2}. Used to realise composite-system
/// orderings other than the default one.
MonomialOperator monomial_with_strings(const MajoranaLabel& label,
                                       const std::vector<std::uint32_t>& string_masks);

/// Dense 2^m x 2^m matrix of C_u.
Matrix dense(const MajoranaLabel& label);

/// Single Majorana operator c_j (1-based) on m modes.
Matrix majorana_operator(int j, int modes);

/// Annihilation operator a_i (1-based mode index) on m modes.
Matrix annihilation_operator(int i, int modes);

/// C = prod_i (1 - 2 a_i^dag a_i), diagonal with entries (-1)^{|n|}.
Matrix parity_operator(int modes);

/// Parity (-1)^{|n|} of Fock basis index n.
inline int fock_parity(std::uint64_t n) { return (__builtin_popcountll(n) % 2 == 0) ? 1 : -1; }

/// Returns m when dim == 2^m, throws std::invalid_argument otherwise.
int modes_from_dimension(Eigen::Index dim);

}  // namespace fermitomo

#endif  // FERMITOMO_MAJORANA_H_
