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

#ifndef FERMITOMO_TOMOGRAPHY_H_
#define FERMITOMO_TOMOGRAPHY_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fermitomo/process.h"
#include "fermitomo/protocol.h"

namespace fermitomo {

/// Submatrix of a 4^m x 4^m label-indexed matrix on the even (odd) labels,
/// both in lexicographic order.
RealMatrix even_block(const RealMatrix& x, int modes);
RealMatrix odd_block(const RealMatrix& x, int modes);
/// Inverse of even_block/odd_block: a block-diagonal label-indexed matrix.
RealMatrix assemble_blocks(const RealMatrix& even, const RealMatrix& odd, int modes);

/// Cached ingredients of the tomography circuits for a map on m modes: the
/// 4^m prepared states and 3^m measurement gates on m + 1 modes.
class ProtocolFrame {
 public:
  explicit ProtocolFrame(int m);

  int m() const { return m_; }
  int outcomes() const { return 1 << (m_ + 1); }
  std::size_t state_count() const { return states_.size(); }
  std::size_t measurement_count() const { return measurements_.size(); }
  std::size_t setting_count() const { return states_.size() * measurements_.size(); }
  /// Setting index of (G index, U index).
  std::size_t setting(std::size_t g, std::size_t u) const { return g * measurements_.size() + u; }

  const Matrix& state(std::size_t g) const { return states_.at(g); }
  /// POVM element U^dag Pi_eta U.
  const Matrix& effect(std::size_t u, int outcome) const;
  /// All effects, row k = u * outcomes() + outcome.
  const std::vector<Matrix>& effects() const { return effects_; }
  const std::vector<Matrix>& states() const { return states_; }

  /// Prepared-state transfer vectors restricted to even composite labels
  /// (columns) and effect transfer vectors (rows).
  RealMatrix input_frame() const;
  RealMatrix output_frame() const;

 private:
  int m_;
  std::vector<Matrix> states_;
  std::vector<Matrix> measurements_;
  std::vector<Matrix> effects_;
};

/// Measured data of the full protocol. Settings are (G index, U index) in
/// the order g * |U| + u; each distribution runs over eta in outcome order.
struct ExperimentRecord {
  int m = 1;
  std::vector<std::pair<int, int>> settings;
  /// Exact probabilities; empty for sampled records.
  std::vector<std::vector<double>> probabilities;
  /// Counts per outcome; empty for exact records.
  std::vector<std::vector<std::uint64_t>> counts;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;

  bool sampled() const { return !counts.empty(); }
  std::size_t setting_count() const { return settings.size(); }
  /// Probabilities, or counts / shots.
  std::vector<double> distribution(std::size_t s) const;
  /// Throws std::invalid_argument when any invariant fails.
  void validate(double tol = 1e-9) const;
};

/// p(eta) = Tr[Pi_eta U (M (x) I)(G rho_0 G^dag) U^dag] for the map on the
/// first m modes of m + 1. Throws std::invalid_argument for SR-invalid maps.
std::vector<double> simulate_setting(const ProcessRep& map, std::size_t g, std::size_t u);
std::vector<double> simulate_setting(const ProcessRep& composite_map, const ProtocolFrame& frame,
                                     std::size_t g, std::size_t u);

/// Exact record over all settings.
ExperimentRecord simulate_experiment(const ProcessRep& map);
ExperimentRecord simulate_experiment(const ProcessRep& map, const ProtocolFrame& frame);

/// Multinomial sampling of every setting of an exact record with a
/// std::mt19937_64 seeded by `seed`; settings are sampled in order.
ExperimentRecord sample_record(const ExperimentRecord& exact, std::uint64_t shots,
                               std::uint64_t seed);

/// g_{k,i} = Tr(E_k rho_i).
RealMatrix gram_matrix(const std::vector<Matrix>& states, const std::vector<Matrix>& effects);
/// g = M_out M_in from transfer frames.
RealMatrix gram_matrix(const RealMatrix& input_frame, const RealMatrix& output_frame);

/// Outcome matrix tilde-M_{k,i} = p_{(i, u)}(eta), k = u * outcomes + eta.
RealMatrix outcome_matrix(const ExperimentRecord& record);

struct EvenInversionResult {
  /// Estimate of the composite even block restricted to span(M_in).
  RealMatrix estimate;
  /// Orthogonal projector onto the span of the input frame.
  RealMatrix input_projector;
  int input_rank = 0;
  int output_rank = 0;
};

/// X = M_out^+ tilde-M M_in^+. Throws RankDeficientError if M_out does not
/// have full column rank.
EvenInversionResult linear_inversion_even(const RealMatrix& outcomes, const RealMatrix& input_frame,
                                          const RealMatrix& output_frame);
EvenInversionResult linear_inversion_even(const ExperimentRecord& record, const ProtocolFrame& frame);

class RankDeficientError : public std::runtime_error {
 public:
  RankDeficientError(const std::string& what, int rank, int required)
      : std::runtime_error(what), rank_(rank), required_(required) {}
  int rank() const { return rank_; }
  int required() const { return required_; }

 private:
  int rank_;
  int required_;
};

/// Real design matrix mapping the block-diagonal Hermitian chi of a map on m
/// modes to the predicted probabilities of every (setting, outcome).
/// Parameters are ordered even block then odd block; inside a block, the
/// diagonal entries come first, then (Re, Im) of each upper-triangular entry
/// in row-major order.
struct DesignMatrix {
  int m = 1;
  RealMatrix matrix;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;
  /// Per parameter: entry index and whether it is the imaginary part.
  std::vector<std::pair<std::size_t, bool>> parameters;

  std::size_t unknowns() const { return parameters.size(); }
  /// Hermitian chi from a parameter vector.
  Matrix chi_from_parameters(const RealVector& x) const;
};

DesignMatrix build_design(const ProtocolFrame& frame);

struct ReconstructionResult {
  int m = 1;
  RealMatrix even_block;
  RealMatrix odd_block;
  Matrix chi;
  double residual_norm = 0.0;
  int design_rank = 0;
  int unknowns = 0;
  /// Ratio of largest to smallest retained singular value.
  double condition_number = 0.0;

  bool informationally_complete() const { return design_rank == unknowns; }
  RealMatrix transfer() const { return assemble_blocks(even_block, odd_block, m); }
};

/// Least-squares fit of chi to every setting of the record, followed by
/// conversion to a transfer matrix. Throws RankDeficientError when the
/// design matrix is rank deficient.
ReconstructionResult reconstruct_full(const ExperimentRecord& record);
ReconstructionResult reconstruct_full(const ExperimentRecord& record, const DesignMatrix& design);

/// Gram matrix and per-gate outcome matrices of a gate-set experiment.
struct GstData {
  RealMatrix gram;
  std::vector<RealMatrix> gates;
};

struct GstEstimate {
  RealMatrix input;
  RealMatrix output;
  std::vector<RealMatrix> gates;
};

/// M_in = M_out^+ g and M_j = M_out^+ tilde-M_j M_in^+ for a guessed output
/// frame. Throws RankDeficientError when the guess or the implied input
/// frame is singular.
GstEstimate gst_linear_inversion(const GstData& data, const RealMatrix& output_guess);

/// Exact gate-set data from transfer frames and gate matrices.
GstData gst_data(const RealMatrix& input_frame, const RealMatrix& output_frame,
                 const std::vector<RealMatrix>& gates);

struct ErrorMetrics {
  double frobenius = 0.0;
  double max_abs = 0.0;
};

ErrorMetrics error_metrics(const RealMatrix& estimate, const RealMatrix& truth);

struct BlockErrors {
  ErrorMetrics even;
  ErrorMetrics odd;
  ErrorMetrics overall;
  /// Mean squared error over both blocks.
  double mse = 0.0;
};

BlockErrors error_metrics(const ReconstructionResult& estimate, const ProcessRep& truth);

/// Basis element of the composite even block, either as a canonical label
/// with a sign or through the block it belongs to:
///   block 0: C_v, block 1: i C_v c_{2m+1}, block 2: i C_v c_{2m+2},
///   block 3: i C_v c_{2m+1} c_{2m+2}.
struct CompositeBasisElement {
  int block = 0;
  MajoranaLabel system_label;
  MajoranaLabel composite_label;
  int sign = 1;
};

/// The composite even basis ordered by block, then by system label. Signs
/// are measured by comparing dense matrices.
std::vector<CompositeBasisElement> composite_block_basis(int m);

/// X -> M(X C) C: chi with its odd block negated.
ProcessRep parity_twisted(const ProcessRep& p);

struct CompositeBlockReport {
  /// Composite even block in the four-block basis.
  RealMatrix matrix;
  double off_block = 0.0;
  /// Max deviation of blocks (0,0), (3,3) from M^even.
  double even_error = 0.0;
  /// Max deviation of blocks (1,1), (2,2) from the odd block of the
  /// parity-twisted map.
  double twisted_odd_error = 0.0;
  /// Max deviation of blocks (1,1), (2,2) from M^odd itself.
  double odd_error = 0.0;
};

CompositeBlockReport composite_block_analysis(const ProcessRep& map);

/// Largest change in any predicted probability Tr(E M_AB(rho)) when the
/// components of the prepared states outside the first two composite
/// blocks are removed, with E the measurement operators projected onto the
/// first two blocks.
double second_term_contribution(const ProcessRep& map);

}  // namespace fermitomo

#endif  // FERMITOMO_TOMOGRAPHY_H_
