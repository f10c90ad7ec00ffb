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

#include "fermitomo/tomography.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "fermitomo/linalg.h"

namespace fermitomo {
namespace {

std::vector<Eigen::Index> label_indices(const std::vector<MajoranaLabel>& labels) {
  std::vector<Eigen::Index> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(static_cast<Eigen::Index>(l.index()));
  return out;
}

RealMatrix submatrix(const RealMatrix& x, const std::vector<Eigen::Index>& idx) {
  RealMatrix out(static_cast<Eigen::Index>(idx.size()), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = x(idx[i], idx[j]);
    }
  }
  return out;
}

void check_label_matrix(const RealMatrix& x, int modes) {
  const Eigen::Index n = Eigen::Index{1} << (2 * modes);
  if (x.rows() != n || x.cols() != n) {
    throw std::invalid_argument("expected a " + std::to_string(n) + "x" + std::to_string(n) +
                                " label-indexed matrix, got " + std::to_string(x.rows()) + "x" +
                                std::to_string(x.cols()));
  }
}

RealMatrix pseudo_inverse(const RealMatrix& a, int* rank) {
  Eigen::CompleteOrthogonalDecomposition<RealMatrix> cod(a);
  cod.setThreshold(kRankThreshold);
  if (rank != nullptr) *rank = static_cast<int>(cod.rank());
  return cod.pseudoInverse();
}

// Rows of `frame` restricted to even composite labels.
RealMatrix even_rows(const RealMatrix& frame, int modes) {
  const auto idx = label_indices(even_labels(modes));
  RealMatrix out(static_cast<Eigen::Index>(idx.size()), frame.cols());
  for (std::size_t i = 0; i < idx.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = frame.row(idx[i]);
  return out;
}

}  // namespace

RealMatrix even_block(const RealMatrix& x, int modes) {
  check_label_matrix(x, modes);
  return submatrix(x, label_indices(even_labels(modes)));
}

RealMatrix odd_block(const RealMatrix& x, int modes) {
  check_label_matrix(x, modes);
  return submatrix(x, label_indices(odd_labels(modes)));
}

RealMatrix assemble_blocks(const RealMatrix& even, const RealMatrix& odd, int modes) {
  const Eigen::Index n = Eigen::Index{1} << (2 * modes);
  if (even.rows() != n / 2 || even.cols() != n / 2 || odd.rows() != n / 2 || odd.cols() != n / 2) {
    throw std::invalid_argument("block sizes do not match " + std::to_string(modes) + " modes");
  }
  RealMatrix out = RealMatrix::Zero(n, n);
  for (const auto& [block, labels] : {std::pair{&even, even_labels(modes)}, std::pair{&odd, odd_labels(modes)}}) {
    const auto idx = label_indices(labels);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = 0; j < idx.size(); ++j) {
        out(idx[i], idx[j]) = (*block)(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
    }
  }
  return out;
}

ProtocolFrame::ProtocolFrame(int m) : m_(m), states_(prepared_states(m)) {
  const GateSet us = generate_U(m + 1);
  const FermionPOVM povm = pairwise_measurement_povm(m + 1);
  for (std::size_t i = 0; i < us.size(); ++i) {
    measurements_.push_back(us.unitary(i));
    const Matrix& u = measurements_.back();
    for (const auto& pi : povm.elements) effects_.push_back(u.adjoint() * pi * u);
  }
}

const Matrix& ProtocolFrame::effect(std::size_t u, int outcome) const {
  if (outcome < 0 || outcome >= outcomes()) throw std::out_of_range("outcome index out of range");
  return effects_.at(u * static_cast<std::size_t>(outcomes()) + static_cast<std::size_t>(outcome));
}

RealMatrix ProtocolFrame::input_frame() const { return even_rows(transfer_columns(states_), m_ + 1); }

RealMatrix ProtocolFrame::output_frame() const {
  return even_rows(transfer_columns(effects_), m_ + 1).transpose();
}

std::vector<double> ExperimentRecord::distribution(std::size_t s) const {
  if (sampled()) {
    const auto& c = counts.at(s);
    std::vector<double> out(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) out[k] = static_cast<double>(c[k]) / static_cast<double>(shots);
    return out;
  }
  return probabilities.at(s);
}

void ExperimentRecord::validate(double tol) const {
  if (m < 1 || m > kMaxModes - 1) throw std::invalid_argument("record: m out of range");
  const std::size_t expected = (std::size_t{1} << (2 * m)) * static_cast<std::size_t>(std::pow(3, m));
  if (settings.size() != expected) {
    throw std::invalid_argument("record: expected " + std::to_string(expected) + " settings, got " +
                                std::to_string(settings.size()));
  }
  const std::size_t outcomes = std::size_t{1} << (m + 1);
  const std::size_t n_u = static_cast<std::size_t>(std::pow(3, m));
  std::vector<bool> seen(expected, false);
  for (const auto& [g, u] : settings) {
    if (g < 0 || u < 0 || static_cast<std::size_t>(g) >= (std::size_t{1} << (2 * m)) ||
        static_cast<std::size_t>(u) >= n_u) {
      throw std::invalid_argument("record: setting index out of range");
    }
    const std::size_t s = static_cast<std::size_t>(g) * n_u + static_cast<std::size_t>(u);
    if (seen[s]) throw std::invalid_argument("record: duplicate setting");
    seen[s] = true;
  }
  if (sampled()) {
    if (!probabilities.empty()) throw std::invalid_argument("record: both counts and probabilities");
    if (counts.size() != expected) throw std::invalid_argument("record: count table size mismatch");
    for (const auto& c : counts) {
      if (c.size() != outcomes) throw std::invalid_argument("record: wrong number of outcomes");
      std::uint64_t total = 0;
      for (auto v : c) total += v;
      if (total != shots) throw std::invalid_argument("record: counts do not sum to shots");
    }
  } else {
    if (probabilities.size() != expected) throw std::invalid_argument("record: probability table size mismatch");
    for (const auto& p : probabilities) {
      if (p.size() != outcomes) throw std::invalid_argument("record: wrong number of outcomes");
      double total = 0.0;
      for (double v : p) {
        if (v < -tol) throw std::invalid_argument("record: negative probability");
        total += v;
      }
      if (std::abs(total - 1.0) > tol) throw std::invalid_argument("record: distribution does not sum to 1");
    }
  }
}

std::vector<double> simulate_setting(const ProcessRep& map, std::size_t g, std::size_t u) {
  const ProtocolFrame frame(map.modes());
  return simulate_setting(extend_to_composite(map, 1), frame, g, u);
}

std::vector<double> simulate_setting(const ProcessRep& composite_map, const ProtocolFrame& frame,
                                     std::size_t g, std::size_t u) {
  if (composite_map.modes() != frame.m() + 1) {
    throw std::invalid_argument("composite map acts on " + std::to_string(composite_map.modes()) +
                                " modes, frame expects " + std::to_string(frame.m() + 1));
  }
  const Matrix out = apply_map(composite_map, frame.state(g));
  std::vector<double> p(static_cast<std::size_t>(frame.outcomes()));
  for (int k = 0; k < frame.outcomes(); ++k) {
    p[static_cast<std::size_t>(k)] = (frame.effect(u, k) * out).trace().real();
  }
  return p;
}

ExperimentRecord simulate_experiment(const ProcessRep& map) {
  return simulate_experiment(map, ProtocolFrame(map.modes()));
}

ExperimentRecord simulate_experiment(const ProcessRep& map, const ProtocolFrame& frame) {
  if (map.modes() != frame.m()) throw std::invalid_argument("map and frame mode counts differ");
  const ProcessRep composite = extend_to_composite(map, 1);
  ExperimentRecord r;
  r.m = frame.m();
  for (std::size_t g = 0; g < frame.state_count(); ++g) {
    const Matrix out = apply_map(composite, frame.state(g));
    for (std::size_t u = 0; u < frame.measurement_count(); ++u) {
      r.settings.emplace_back(static_cast<int>(g), static_cast<int>(u));
      std::vector<double> p(static_cast<std::size_t>(frame.outcomes()));
      for (int k = 0; k < frame.outcomes(); ++k) {
        p[static_cast<std::size_t>(k)] = (frame.effect(u, k) * out).trace().real();
      }
      r.probabilities.push_back(std::move(p));
    }
  }
  return r;
}

ExperimentRecord sample_record(const ExperimentRecord& exact, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shots must be at least 1");
  if (exact.sampled()) throw std::invalid_argument("sample_record needs exact probabilities");
  std::mt19937_64 rng(seed);
  ExperimentRecord r;
  r.m = exact.m;
  r.settings = exact.settings;
  r.shots = shots;
  r.seed = seed;
  for (const auto& p : exact.probabilities) {
    std::vector<std::uint64_t> c(p.size(), 0);
    std::uint64_t remaining = shots;
    double mass = 1.0;
    for (std::size_t k = 0; k + 1 < p.size() && remaining > 0; ++k) {
      const double pk = std::max(p[k], 0.0);
      const double q = mass > 0.0 ? std::clamp(pk / mass, 0.0, 1.0) : 0.0;
      std::binomial_distribution<std::uint64_t> draw(remaining, q);
      c[k] = draw(rng);
      remaining -= c[k];
      mass -= pk;
    }
    c.back() += remaining;
    r.counts.push_back(std::move(c));
  }
  return r;
}

RealMatrix gram_matrix(const std::vector<Matrix>& states, const std::vector<Matrix>& effects) {
  RealMatrix g(static_cast<Eigen::Index>(effects.size()), static_cast<Eigen::Index>(states.size()));
  for (std::size_t k = 0; k < effects.size(); ++k) {
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (effects[k].rows() != states[i].rows()) throw std::invalid_argument("gram_matrix: dimension mismatch");
      g(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) = (effects[k] * states[i]).trace().real();
    }
  }
  return g;
}

RealMatrix gram_matrix(const RealMatrix& input_frame, const RealMatrix& output_frame) {
  if (output_frame.cols() != input_frame.rows()) throw std::invalid_argument("gram_matrix: dimension mismatch");
  return output_frame * input_frame;
}

RealMatrix outcome_matrix(const ExperimentRecord& record) {
  record.validate();
  const std::size_t n_g = std::size_t{1} << (2 * record.m);
  const std::size_t n_u = record.settings.size() / n_g;
  const std::size_t outcomes = std::size_t{1} << (record.m + 1);
  RealMatrix out(static_cast<Eigen::Index>(n_u * outcomes), static_cast<Eigen::Index>(n_g));
  for (std::size_t s = 0; s < record.settings.size(); ++s) {
    const auto [g, u] = record.settings[s];
    const auto p = record.distribution(s);
    for (std::size_t k = 0; k < outcomes; ++k) {
      out(static_cast<Eigen::Index>(static_cast<std::size_t>(u) * outcomes + k), g) = p[k];
    }
  }
  return out;
}

EvenInversionResult linear_inversion_even(const RealMatrix& outcomes, const RealMatrix& input_frame,
                                          const RealMatrix& output_frame) {
  if (outcomes.rows() != output_frame.rows() || outcomes.cols() != input_frame.cols() ||
      output_frame.cols() != input_frame.rows()) {
    throw std::invalid_argument("linear_inversion_even: dimension mismatch");
  }
  EvenInversionResult r;
  const RealMatrix out_pinv = pseudo_inverse(output_frame, &r.output_rank);
  const RealMatrix in_pinv = pseudo_inverse(input_frame, &r.input_rank);
  if (r.output_rank < output_frame.cols()) {
    throw RankDeficientError("output frame has rank " + std::to_string(r.output_rank) + ", need " +
                                 std::to_string(output_frame.cols()),
                             r.output_rank, static_cast<int>(output_frame.cols()));
  }
  r.estimate = out_pinv * outcomes * in_pinv;
  r.input_projector = input_frame * in_pinv;
  return r;
}

EvenInversionResult linear_inversion_even(const ExperimentRecord& record, const ProtocolFrame& frame) {
  if (record.m != frame.m()) throw std::invalid_argument("record and frame mode counts differ");
  return linear_inversion_even(outcome_matrix(record), frame.input_frame(), frame.output_frame());
}

Matrix DesignMatrix::chi_from_parameters(const RealVector& x) const {
  if (static_cast<std::size_t>(x.size()) != parameters.size()) {
    throw std::invalid_argument("parameter vector has the wrong length");
  }
  const Eigen::Index n = Eigen::Index{1} << (2 * m);
  Matrix chi = Matrix::Zero(n, n);
  for (std::size_t p = 0; p < parameters.size(); ++p) {
    const auto [e, imag] = parameters[p];
    const auto a = static_cast<Eigen::Index>(entries[e].first);
    const auto b = static_cast<Eigen::Index>(entries[e].second);
    const Complex v = imag ? Complex(0.0, x(static_cast<Eigen::Index>(p))) : Complex(x(static_cast<Eigen::Index>(p)));
    chi(a, b) += v;
    if (a != b) chi(b, a) += std::conj(v);
  }
  return chi;
}

DesignMatrix build_design(const ProtocolFrame& frame) {
  const int m = frame.m();
  DesignMatrix d;
  d.m = m;
  for (const auto& labels : {even_labels(m), odd_labels(m)}) {
    for (const auto& l : labels) {
      d.parameters.emplace_back(d.entries.size(), false);
      d.entries.emplace_back(l.index(), l.index());
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = i + 1; j < labels.size(); ++j) {
        d.parameters.emplace_back(d.entries.size(), false);
        d.parameters.emplace_back(d.entries.size(), true);
        d.entries.emplace_back(labels[i].index(), labels[j].index());
      }
    }
  }

  const auto outcomes = static_cast<std::size_t>(frame.outcomes());
  const std::size_t rows = frame.setting_count() * outcomes;
  // A(row) = Tr(E C_a rho C_b) for the padded labels of an entry (a, b).
  auto term = [&](std::uint64_t a, std::uint64_t b) {
    const MonomialOperator ca = monomial(MajoranaLabel(m, a).padded(1));
    const MonomialOperator cb = monomial(MajoranaLabel(m, b).padded(1));
    Vector col(static_cast<Eigen::Index>(rows));
    for (std::size_t g = 0; g < frame.state_count(); ++g) {
      const Matrix z = cb.right_multiply(ca.left_multiply(frame.state(g)));
      for (std::size_t u = 0; u < frame.measurement_count(); ++u) {
        for (std::size_t k = 0; k < outcomes; ++k) {
          const Matrix& e = frame.effect(u, static_cast<int>(k));
          col(static_cast<Eigen::Index>(frame.setting(g, u) * outcomes + k)) =
              e.transpose().cwiseProduct(z).sum();
        }
      }
    }
    return col;
  };

  d.matrix.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(d.parameters.size()));
  Eigen::Index col = 0;
  for (const auto& [a, b] : d.entries) {
    if (a == b) {
      d.matrix.col(col++) = term(a, a).real();
    } else {
      const Vector ab = term(a, b);
      const Vector ba = term(b, a);
      d.matrix.col(col++) = (ab + ba).real();
      d.matrix.col(col++) = -(ab - ba).imag();
    }
  }
  return d;
}

ReconstructionResult reconstruct_full(const ExperimentRecord& record) {
  return reconstruct_full(record, build_design(ProtocolFrame(record.m)));
}

ReconstructionResult reconstruct_full(const ExperimentRecord& record, const DesignMatrix& design) {
  record.validate();
  if (record.m != design.m) throw std::invalid_argument("record and design mode counts differ");
  const std::size_t outcomes = std::size_t{1} << (record.m + 1);
  const std::size_t n_u = record.settings.size() >> (2 * record.m);
  RealVector y(design.matrix.rows());
  for (std::size_t s = 0; s < record.settings.size(); ++s) {
    const auto [g, u] = record.settings[s];
    const auto p = record.distribution(s);
    const std::size_t row = (static_cast<std::size_t>(g) * n_u + static_cast<std::size_t>(u)) * outcomes;
    for (std::size_t k = 0; k < outcomes; ++k) y(static_cast<Eigen::Index>(row + k)) = p[k];
  }

  Eigen::BDCSVD<RealMatrix> svd(design.matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(kRankThreshold);
  ReconstructionResult r;
  r.m = record.m;
  r.unknowns = static_cast<int>(design.unknowns());
  r.design_rank = static_cast<int>(svd.rank());
  const RealVector& sv = svd.singularValues();
  r.condition_number = r.design_rank > 0 ? sv(0) / sv(r.design_rank - 1) : 0.0;
  if (!r.informationally_complete()) {
    throw RankDeficientError("design matrix has rank " + std::to_string(r.design_rank) + " for " +
                                 std::to_string(r.unknowns) + " unknowns",
                             r.design_rank, r.unknowns);
  }
  const RealVector x = svd.solve(y);
  r.residual_norm = (design.matrix * x - y).norm();
  r.chi = design.chi_from_parameters(x);
  const RealMatrix t = transfer_matrix(ProcessRep::FromChi(r.chi));
  r.even_block = even_block(t, r.m);
  r.odd_block = odd_block(t, r.m);
  return r;
}

GstEstimate gst_linear_inversion(const GstData& data, const RealMatrix& output_guess) {
  if (output_guess.rows() != data.gram.rows()) throw std::invalid_argument("gst: guess has the wrong row count");
  int rank = 0;
  const RealMatrix guess_pinv = pseudo_inverse(output_guess, &rank);
  if (rank < output_guess.cols()) {
    throw RankDeficientError("guessed output frame has rank " + std::to_string(rank),
                             rank, static_cast<int>(output_guess.cols()));
  }
  GstEstimate e;
  e.output = output_guess;
  e.input = guess_pinv * data.gram;
  const RealMatrix input_pinv = pseudo_inverse(e.input, &rank);
  if (rank < e.input.rows()) {
    throw RankDeficientError("estimated input frame has rank " + std::to_string(rank), rank,
                             static_cast<int>(e.input.rows()));
  }
  for (const auto& mt : data.gates) {
    if (mt.rows() != data.gram.rows() || mt.cols() != data.gram.cols()) {
      throw std::invalid_argument("gst: gate data shape differs from the Gram matrix");
    }
    e.gates.push_back(guess_pinv * mt * input_pinv);
  }
  return e;
}

GstData gst_data(const RealMatrix& input_frame, const RealMatrix& output_frame,
                 const std::vector<RealMatrix>& gates) {
  GstData d;
  d.gram = gram_matrix(input_frame, output_frame);
  for (const auto& x : gates) d.gates.push_back(output_frame * x * input_frame);
  return d;
}

ErrorMetrics error_metrics(const RealMatrix& estimate, const RealMatrix& truth) {
  if (estimate.rows() != truth.rows() || estimate.cols() != truth.cols()) {
    throw std::invalid_argument("error_metrics: dimension mismatch");
  }
  const RealMatrix d = estimate - truth;
  return ErrorMetrics{d.norm(), max_abs(d)};
}

BlockErrors error_metrics(const ReconstructionResult& estimate, const ProcessRep& truth) {
  if (truth.modes() != estimate.m) throw std::invalid_argument("error_metrics: mode counts differ");
  const RealMatrix t = transfer_matrix(truth);
  BlockErrors b;
  b.even = error_metrics(estimate.even_block, even_block(t, estimate.m));
  b.odd = error_metrics(estimate.odd_block, odd_block(t, estimate.m));
  b.overall = ErrorMetrics{std::hypot(b.even.frobenius, b.odd.frobenius), std::max(b.even.max_abs, b.odd.max_abs)};
  const double entries = 2.0 * static_cast<double>(estimate.even_block.size());
  b.mse = b.overall.frobenius * b.overall.frobenius / entries;
  return b;
}

std::vector<CompositeBasisElement> composite_block_basis(int m) {
  const int total = m + 1;
  const Complex i1(0.0, 1.0);
  const Matrix a = majorana_operator(2 * m + 1, total);
  const Matrix b = majorana_operator(2 * m + 2, total);
  const Eigen::Index dim = Eigen::Index{1} << total;
  const Matrix id = Matrix::Identity(dim, dim);
  const std::array<Matrix, 4> tails{id, i1 * a, i1 * b, i1 * a * b};
  const std::array<MajoranaLabel, 4> tail_labels{
      MajoranaLabel::Zero(total), MajoranaLabel::Single(total, 2 * m + 1),
      MajoranaLabel::Single(total, 2 * m + 2),
      MajoranaLabel::Single(total, 2 * m + 1) + MajoranaLabel::Single(total, 2 * m + 2)};

  std::vector<CompositeBasisElement> out;
  for (int block = 0; block < 4; ++block) {
    const bool even = block == 0 || block == 3;
    for (const auto& v : even ? even_labels(m) : odd_labels(m)) {
      CompositeBasisElement e{block, v, v.padded(1) + tail_labels[static_cast<std::size_t>(block)], 1};
      const Matrix element = dense(v.padded(1)) * tails[static_cast<std::size_t>(block)];
      const Complex overlap = (dense(e.composite_label) * element).trace() / static_cast<double>(dim);
      if (std::abs(std::abs(overlap.real()) - 1.0) > 1e-12 || std::abs(overlap.imag()) > 1e-12) {
        throw std::logic_error("composite basis element is not a signed Majorana product");
      }
      e.sign = overlap.real() > 0.0 ? 1 : -1;
      out.push_back(e);
    }
  }
  return out;
}

ProcessRep parity_twisted(const ProcessRep& p) {
  Matrix chi = chi_matrix(p);
  for (const auto& u : odd_labels(p.modes())) {
    chi.row(static_cast<Eigen::Index>(u.index())) *= -1.0;
  }
  return ProcessRep::FromChi(std::move(chi));
}

CompositeBlockReport composite_block_analysis(const ProcessRep& map) {
  const int m = map.modes();
  const RealMatrix t = transfer_matrix(extend_to_composite(map, 1));
  const auto basis = composite_block_basis(m);
  const auto n = static_cast<Eigen::Index>(basis.size());
  const Eigen::Index h = n / 4;

  CompositeBlockReport r;
  r.matrix.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& a = basis[static_cast<std::size_t>(i)];
      const auto& b = basis[static_cast<std::size_t>(j)];
      const double v = a.sign * b.sign *
                       t(static_cast<Eigen::Index>(a.composite_label.index()),
                         static_cast<Eigen::Index>(b.composite_label.index()));
      r.matrix(i, j) = v;
      if (a.block != b.block) r.off_block = std::max(r.off_block, std::abs(v));
    }
  }
  const RealMatrix mt = transfer_matrix(map);
  const RealMatrix me = even_block(mt, m);
  const RealMatrix mo = odd_block(mt, m);
  const RealMatrix tw = odd_block(transfer_matrix(parity_twisted(map)), m);
  for (int k : {0, 3}) r.even_error = std::max(r.even_error, max_abs(RealMatrix(r.matrix.block(k * h, k * h, h, h) - me)));
  for (int k : {1, 2}) {
    const RealMatrix blk = r.matrix.block(k * h, k * h, h, h);
    r.twisted_odd_error = std::max(r.twisted_odd_error, max_abs(RealMatrix(blk - tw)));
    r.odd_error = std::max(r.odd_error, max_abs(RealMatrix(blk - mo)));
  }
  return r;
}

double second_term_contribution(const ProcessRep& map) {
  const int m = map.modes();
  const int total = m + 1;
  const ProtocolFrame frame(m);
  const RealMatrix t = transfer_matrix(extend_to_composite(map, 1));
  const MajoranaLabel last = MajoranaLabel::Single(total, 2 * m + 2);
  RealVector keep = RealVector::Zero(t.rows());
  for (const auto& l : all_labels(total)) {
    if ((l.index() & last.index()) == 0) keep(static_cast<Eigen::Index>(l.index())) = 1.0;
  }
  double worst = 0.0;
  const RealMatrix states = transfer_columns(frame.states());
  const RealMatrix effects = transfer_columns(measurement_operators(m));
  for (Eigen::Index k = 0; k < effects.cols(); ++k) {
    const RealVector e = effects.col(k).cwiseProduct(keep);
    const RealVector et = t.transpose() * e;
    for (Eigen::Index i = 0; i < states.cols(); ++i) {
      const double full = et.dot(states.col(i));
      const double trimmed = et.dot(states.col(i).cwiseProduct(keep));
      worst = std::max(worst, std::abs(full - trimmed));
    }
  }
  return worst;
}

}  // namespace fermitomo
