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

#ifndef FERMITOMO_PROCESS_H_
#define FERMITOMO_PROCESS_H_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fermitomo/majorana.h"
#include "fermitomo/state.h"

namespace fermitomo {

enum class Representation { kKraus, kChi, kChoi, kTransfer };

std::string_view to_string(Representation r);
Representation representation_from_string(std::string_view name);

struct KrausRep {
  std::vector<Matrix> operators;
};

/// M(X) = sum_{u,u'} chi_{u,u'} C_u X C_{u'}; indices are label indices.
struct ChiRep {
  Matrix chi;
};

/// Choi(M) = (M_A (x) I_B)(|Phi><Phi|) with |Phi> = sum_n |n>_A |n>_B
/// (unnormalised). Row/column index is n_A * 2^m + n_B.
struct ChoiRep {
  Matrix choi;
};

/// M_{u,u'} = 2^{-m} Tr[C_u M(C_{u'})].
struct TransferRep {
  RealMatrix matrix;
};

/// A process on m fermion modes held in exactly one representation.
class ProcessRep {
 public:
  using Data = std::variant<KrausRep, ChiRep, ChoiRep, TransferRep>;

  static ProcessRep FromKraus(std::vector<Matrix> operators);
  static ProcessRep FromChi(Matrix chi);
  static ProcessRep FromChoi(Matrix choi);
  static ProcessRep FromTransfer(RealMatrix transfer);
  static ProcessRep Identity(int modes);
  static ProcessRep Unitary(const Matrix& u) { return FromKraus({u}); }

  int modes() const { return modes_; }
  Representation representation() const;
  const Data& data() const { return data_; }

  const KrausRep& kraus() const;
  const ChiRep& chi() const;
  const ChoiRep& choi() const;
  const TransferRep& transfer() const;

 private:
  ProcessRep(int modes, Data data) : modes_(modes), data_(std::move(data)) {}

  int modes_;
  Data data_;
};

// Conversions. Each accepts any source representation.
ProcessRep to_choi(const ProcessRep& p);
ProcessRep to_chi(const ProcessRep& p);
/// Throws std::domain_error if the map is not Hermiticity preserving (the
/// transfer matrix would have an imaginary part above `tol`).
ProcessRep to_transfer(const ProcessRep& p, double tol = 1e-9);
/// Canonical Kraus set from the Choi eigendecomposition: eigenvalue-weighted
/// eigenvectors in descending eigenvalue order, each rotated so its first
/// nonzero entry is real positive. Throws std::domain_error if the Choi
/// matrix is not PSD (min eigenvalue below -kPsdThreshold).
ProcessRep to_kraus(const ProcessRep& p, double tol = kDefaultTolerance);

Matrix choi_matrix(const ProcessRep& p);
Matrix chi_matrix(const ProcessRep& p);
RealMatrix transfer_matrix(const ProcessRep& p, double tol = 1e-9);
/// Transfer matrix without the Hermiticity-preservation requirement.
Matrix transfer_matrix_complex(const ProcessRep& p);
std::vector<Matrix> kraus_operators(const ProcessRep& p, double tol = kDefaultTolerance);

/// M(x).
Matrix apply_map(const ProcessRep& p, const Matrix& x);
/// sum chi_{u,u'} C_u x C_{u'} with C_u on log2(dim x) modes.
Matrix apply_chi(const Matrix& chi, const Matrix& x);

/// Composite-system conventions of the doubled system used for Choi matrices.
namespace doubled {

/// Majorana c_j (1 <= j <= 4m) of the doubled system A (modes 1..m) plus
/// B (modes m+1..2m) in the ordering |n, n'> = A_{A;n}^dag A_{B;n'}^dag |V>.
/// In this ordering A operators act as X (x) 1 and B operators carry the
/// parity string of all of A.
Matrix majorana_operator(int j, int modes_per_side);

/// C_u (label on 2m modes) of the doubled system.
MonomialOperator monomial(const MajoranaLabel& label);

/// Lifts an operator of subsystem A to the doubled system by expanding it
/// in Majorana products and rebuilding every product with the doubled-system
/// Majoranas.
Matrix lift_system_operator(const Matrix& op);

/// |Phi> = sum_n |n>_A |n>_B.
Vector max_entangled(int modes_per_side);

/// C_A (x) C_B.
Matrix parity(int modes_per_side);

}  // namespace doubled

/// Superselection predicates computed independently from three
/// representations.
struct SrMapReport {
  Check choi;      // [C_A (x) C_B, Choi] = 0
  Check chi;       // P_odd chi P_even = P_even chi P_odd = 0
  Check transfer;  // P_odd M P_even = P_even M P_odd = 0

  bool valid() const { return choi.passed && chi.passed && transfer.passed; }
  bool consistent() const {
    return choi.passed == chi.passed && chi.passed == transfer.passed;
  }
};

SrMapReport is_sr_valid_map(const ProcessRep& p, double tol = kDefaultTolerance);

struct MapReport {
  SrMapReport sr;
  Check cp_choi;      // Choi Hermitian and PSD
  Check cp_chi;       // chi Hermitian and PSD
  Check tp_choi;      // Tr_A Choi = 1_B
  Check tp_chi;       // sum chi_{u,u'} C_{u'} C_u = 1
  Check tp_transfer;  // row 0 of M is the unit row
  Check unital_choi;      // Tr_B Choi = 1_A
  Check unital_transfer;  // column 0 of M is the unit column
  Complex chi_trace;

  bool cp() const { return cp_choi.passed && cp_chi.passed; }
  bool tp() const { return tp_choi.passed && tp_chi.passed && tp_transfer.passed; }
  bool ok() const { return sr.valid() && cp() && tp(); }
  /// Whether every predicate agrees across its representations.
  bool consistent() const;
  std::vector<Check> checks() const;
};

MapReport validate_map(const ProcessRep& p, double tol = kDefaultTolerance);

/// Embeds an SR-valid map on m modes into a system of `total_modes` modes,
/// acting on modes [first_mode, first_mode + m) (0-based). Each chi term
/// C_u . C_u' becomes the zero-padded term on the larger system, with the
/// default Jordan-Wigner ordering. Throws std::invalid_argument for
/// SR-invalid input.
ProcessRep embed_process(const ProcessRep& p, int first_mode, int total_modes,
                         double tol = kDefaultTolerance);

/// M (x) I on m + extra_modes modes, with the new modes appended.
ProcessRep extend_to_composite(const ProcessRep& p, int extra_modes,
                               double tol = kDefaultTolerance);

/// `first` followed by `second`, as a transfer matrix product.
ProcessRep compose(const ProcessRep& second, const ProcessRep& first);

}  // namespace fermitomo

#endif  // FERMITOMO_PROCESS_H_
