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

#include "fermitomo/process.h"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "fermitomo/linalg.h"

namespace fermitomo {

namespace {

Eigen::Index pow2(int k) { return Eigen::Index{1} << k; }

int modes_from_superoperator_size(Eigen::Index n) {
  const int two_m = modes_from_dimension(n);
  if (two_m % 2 != 0) throw std::invalid_argument("superoperator size is not 4^m");
  return two_m / 2;
}

void require_square(const Matrix& x, const char* what) {
  if (x.rows() != x.cols()) throw std::invalid_argument(std::string(what) + " is not square");
}

// Columns w_u = C_u^{AB} |Phi> of the doubled system, u over system labels.
Matrix choi_frame(int m) {
  const Vector phi = doubled::max_entangled(m);
  const auto labels = all_labels(m);
  Matrix w(phi.size(), static_cast<Eigen::Index>(labels.size()));
  for (const auto& l : labels) {
    w.col(static_cast<Eigen::Index>(l.index())) =
        doubled::monomial(l.embedded(0, 2 * m)).left_multiply(phi);
  }
  return w;
}

Matrix chi_from_kraus(const std::vector<Matrix>& ops) {
  const int m = modes_from_dimension(ops.front().rows());
  const double scale = 1.0 / std::sqrt(static_cast<double>(pow2(m)));
  Matrix chi = Matrix::Zero(pow2(2 * m), pow2(2 * m));
  for (const auto& f : ops) {
    const Vector a = majorana_coefficients(f) * scale;
    chi += a * a.adjoint();
  }
  return chi;
}

Matrix choi_from_kraus(const std::vector<Matrix>& ops) {
  const int m = modes_from_dimension(ops.front().rows());
  const Vector phi = doubled::max_entangled(m);
  Matrix choi = Matrix::Zero(phi.size(), phi.size());
  for (const auto& f : ops) {
    const Vector w = doubled::lift_system_operator(f) * phi;
    choi += w * w.adjoint();
  }
  return choi;
}

Matrix choi_from_chi(const Matrix& chi) {
  const int m = modes_from_superoperator_size(chi.rows());
  const Matrix w = choi_frame(m);
  return w * chi * w.adjoint();
}

Matrix chi_from_choi(const Matrix& choi) {
  const int m = modes_from_superoperator_size(choi.rows());
  const Matrix w = choi_frame(m);
  return w.adjoint() * choi * w / static_cast<double>(pow2(2 * m));
}

Matrix apply_transfer(const Matrix& transfer, const Matrix& x) {
  return from_majorana_coefficients(transfer * majorana_coefficients(x));
}

Matrix choi_from_transfer(const Matrix& transfer) {
  const int m = modes_from_superoperator_size(transfer.rows());
  const Eigen::Index d = pow2(m);
  Matrix choi = Matrix::Zero(d * d, d * d);
  for (Eigen::Index n = 0; n < d; ++n) {
    for (Eigen::Index k = 0; k < d; ++k) {
      Matrix e = Matrix::Zero(d, d);
      e(n, k) = 1.0;
      choi += kron(apply_transfer(transfer, e), e);
    }
  }
  return choi;
}

Matrix transfer_from_kraus(const std::vector<Matrix>& ops) {
  const int m = modes_from_dimension(ops.front().rows());
  const Eigen::Index d = pow2(m);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  Matrix out(d * d, d * d);
  for (const auto& l : all_labels(m)) {
    const Matrix c = dense(l);
    Matrix image = Matrix::Zero(d, d);
    for (const auto& f : ops) image += f * c * f.adjoint();
    out.col(static_cast<Eigen::Index>(l.index())) = majorana_coefficients(image) * scale;
  }
  return out;
}

// M_{u,u'} = sum_v chi_{v, v'} eta with v' = u + v + u' and
// C_u C_v C_u' C_v' = eta * 1.
Matrix transfer_from_chi(const Matrix& chi) {
  const int m = modes_from_superoperator_size(chi.rows());
  const auto labels = all_labels(m);
  const Eigen::Index n = chi.rows();
  Matrix out = Matrix::Zero(n, n);
  for (const auto& u : labels) {
    for (const auto& v : labels) {
      const PhasedLabel uv = product(u, v);
      for (const auto& up : labels) {
        const PhasedLabel uvu = product(uv.label, up);
        const Eigen::Index vp = static_cast<Eigen::Index>(uvu.label.index());
        const Complex coeff = chi(static_cast<Eigen::Index>(v.index()), vp);
        if (coeff == Complex(0.0)) continue;
        out(static_cast<Eigen::Index>(u.index()), static_cast<Eigen::Index>(up.index())) +=
            coeff * (uv.phase * uvu.phase).value();
      }
    }
  }
  return out;
}

std::vector<Matrix> kraus_from_choi(const Matrix& choi, double tol) {
  const int two_m = modes_from_dimension(choi.rows());
  const Eigen::Index d = pow2(two_m / 2);
  if (hermiticity_violation(choi) > tol) {
    throw std::domain_error("to_kraus: Choi matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (choi + choi.adjoint()));
  const RealVector& values = solver.eigenvalues();
  if (values.minCoeff() < -kPsdThreshold) {
    throw std::domain_error("to_kraus: map is not completely positive (min Choi eigenvalue " +
                            std::to_string(values.minCoeff()) + ")");
  }
  std::vector<Matrix> ops;
  // Eigen sorts ascending.
  for (Eigen::Index k = values.size() - 1; k >= 0; --k) {
    if (values(k) <= tol) break;
    Vector v = solver.eigenvectors().col(k);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (std::abs(v(i)) > 1e-12) {
        v *= std::conj(v(i)) / std::abs(v(i));
        break;
      }
    }
    v *= std::sqrt(values(k));
    Matrix f(d, d);
    for (Eigen::Index a = 0; a < d; ++a) {
      for (Eigen::Index b = 0; b < d; ++b) f(a, b) = v(a * d + b);
    }
    ops.push_back(std::move(f));
  }
  if (ops.empty()) ops.push_back(Matrix::Zero(d, d));
  return ops;
}

double off_block_magnitude(const Matrix& x, int m) {
  double worst = 0.0;
  for (const auto& u : all_labels(m)) {
    for (const auto& v : all_labels(m)) {
      if (u.is_even() == v.is_even()) continue;
      worst = std::max(worst, std::abs(x(static_cast<Eigen::Index>(u.index()),
                                         static_cast<Eigen::Index>(v.index()))));
    }
  }
  return worst;
}

}  // namespace

std::string_view to_string(Representation r) {
  switch (r) {
    case Representation::kKraus: return "kraus";
    case Representation::kChi: return "chi";
    case Representation::kChoi: return "choi";
    case Representation::kTransfer: return "transfer";
  }
  return "unknown";
}

Representation representation_from_string(std::string_view name) {
  if (name == "kraus") return Representation::kKraus;
  if (name == "chi") return Representation::kChi;
  if (name == "choi") return Representation::kChoi;
  if (name == "transfer") return Representation::kTransfer;
  throw std::invalid_argument("unknown representation '" + std::string(name) + "'");
}

ProcessRep ProcessRep::FromKraus(std::vector<Matrix> operators) {
  if (operators.empty()) throw std::invalid_argument("Kraus list is empty");
  for (const auto& f : operators) {
    require_square(f, "Kraus operator");
    if (f.rows() != operators.front().rows()) {
      throw std::invalid_argument("Kraus operators have different dimensions");
    }
  }
  const int m = modes_from_dimension(operators.front().rows());
  return ProcessRep(m, KrausRep{std::move(operators)});
}

ProcessRep ProcessRep::FromChi(Matrix chi) {
  require_square(chi, "chi matrix");
  const int m = modes_from_superoperator_size(chi.rows());
  return ProcessRep(m, ChiRep{std::move(chi)});
}

ProcessRep ProcessRep::FromChoi(Matrix choi) {
  require_square(choi, "Choi matrix");
  const int m = modes_from_superoperator_size(choi.rows());
  return ProcessRep(m, ChoiRep{std::move(choi)});
}

ProcessRep ProcessRep::FromTransfer(RealMatrix transfer) {
  if (transfer.rows() != transfer.cols()) {
    throw std::invalid_argument("transfer matrix is not square");
  }
  const int m = modes_from_superoperator_size(transfer.rows());
  return ProcessRep(m, TransferRep{std::move(transfer)});
}

ProcessRep ProcessRep::Identity(int modes) {
  return FromKraus({Matrix::Identity(pow2(modes), pow2(modes))});
}

Representation ProcessRep::representation() const {
  return static_cast<Representation>(data_.index());
}

const KrausRep& ProcessRep::kraus() const {
  if (auto* k = std::get_if<KrausRep>(&data_)) return *k;
  throw std::logic_error("process is not held as a Kraus list");
}

const ChiRep& ProcessRep::chi() const {
  if (auto* k = std::get_if<ChiRep>(&data_)) return *k;
  throw std::logic_error("process is not held as a chi matrix");
}

const ChoiRep& ProcessRep::choi() const {
  if (auto* k = std::get_if<ChoiRep>(&data_)) return *k;
  throw std::logic_error("process is not held as a Choi matrix");
}

const TransferRep& ProcessRep::transfer() const {
  if (auto* k = std::get_if<TransferRep>(&data_)) return *k;
  throw std::logic_error("process is not held as a transfer matrix");
}

Matrix choi_matrix(const ProcessRep& p) {
  switch (p.representation()) {
    case Representation::kKraus: return choi_from_kraus(p.kraus().operators);
    case Representation::kChi: return choi_from_chi(p.chi().chi);
    case Representation::kChoi: return p.choi().choi;
    case Representation::kTransfer:
      return choi_from_transfer(p.transfer().matrix.cast<Complex>());
  }
  throw std::logic_error("unreachable");
}

Matrix chi_matrix(const ProcessRep& p) {
  switch (p.representation()) {
    case Representation::kKraus: return chi_from_kraus(p.kraus().operators);
    case Representation::kChi: return p.chi().chi;
    case Representation::kChoi: return chi_from_choi(p.choi().choi);
    case Representation::kTransfer: return chi_from_choi(choi_matrix(p));
  }
  throw std::logic_error("unreachable");
}

Matrix transfer_matrix_complex(const ProcessRep& p) {
  switch (p.representation()) {
    case Representation::kKraus: return transfer_from_kraus(p.kraus().operators);
    case Representation::kChi: return transfer_from_chi(p.chi().chi);
    case Representation::kChoi: return transfer_from_chi(chi_from_choi(p.choi().choi));
    case Representation::kTransfer: return p.transfer().matrix.cast<Complex>();
  }
  throw std::logic_error("unreachable");
}

RealMatrix transfer_matrix(const ProcessRep& p, double tol) {
  if (p.representation() == Representation::kTransfer) return p.transfer().matrix;
  const Matrix t = transfer_matrix_complex(p);
  const double imag = t.imag().cwiseAbs().maxCoeff();
  if (imag > tol) {
    throw std::domain_error("transfer matrix has imaginary part " + std::to_string(imag) +
                            "; map is not Hermiticity preserving");
  }
  return t.real();
}

std::vector<Matrix> kraus_operators(const ProcessRep& p, double tol) {
  if (p.representation() == Representation::kKraus) return p.kraus().operators;
  return kraus_from_choi(choi_matrix(p), tol);
}

ProcessRep to_choi(const ProcessRep& p) { return ProcessRep::FromChoi(choi_matrix(p)); }
ProcessRep to_chi(const ProcessRep& p) { return ProcessRep::FromChi(chi_matrix(p)); }
ProcessRep to_transfer(const ProcessRep& p, double tol) {
  return ProcessRep::FromTransfer(transfer_matrix(p, tol));
}
ProcessRep to_kraus(const ProcessRep& p, double tol) {
  return ProcessRep::FromKraus(kraus_from_choi(choi_matrix(p), tol));
}

Matrix apply_chi(const Matrix& chi, const Matrix& x) {
  const int m = modes_from_dimension(x.rows());
  if (chi.rows() != pow2(2 * m) || chi.cols() != chi.rows()) {
    throw std::invalid_argument("apply_chi: chi size does not match operator dimension");
  }
  std::vector<MonomialOperator> ops;
  ops.reserve(static_cast<std::size_t>(chi.rows()));
  for (const auto& l : all_labels(m)) ops.push_back(monomial(l));
  Matrix out = Matrix::Zero(x.rows(), x.cols());
  for (Eigen::Index u = 0; u < chi.rows(); ++u) {
    Matrix left;
    bool have_left = false;
    for (Eigen::Index v = 0; v < chi.cols(); ++v) {
      const Complex c = chi(u, v);
      if (c == Complex(0.0)) continue;
      if (!have_left) {
        left = ops[u].left_multiply(x);
        have_left = true;
      }
      out += c * ops[v].right_multiply(left);
    }
  }
  return out;
}

Matrix apply_map(const ProcessRep& p, const Matrix& x) {
  if (x.rows() != pow2(p.modes()) || x.cols() != x.rows()) {
    throw std::invalid_argument("apply_map: operator dimension does not match the map");
  }
  switch (p.representation()) {
    case Representation::kKraus: {
      Matrix out = Matrix::Zero(x.rows(), x.cols());
      for (const auto& f : p.kraus().operators) out += f * x * f.adjoint();
      return out;
    }
    case Representation::kChi: return apply_chi(p.chi().chi, x);
    case Representation::kChoi: return apply_chi(chi_from_choi(p.choi().choi), x);
    case Representation::kTransfer: return apply_transfer(p.transfer().matrix.cast<Complex>(), x);
  }
  throw std::logic_error("unreachable");
}

namespace doubled {

namespace {

std::vector<std::uint32_t> string_masks(int m) {
  const int total = 2 * m;
  auto fock_bit = [total](int mode) { return std::uint32_t{1} << (total - 1 - mode); };
  std::vector<std::uint32_t> masks(total, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) masks[i] |= fock_bit(j);
  }
  for (int i = m; i < total; ++i) {
    for (int j = 0; j < m; ++j) masks[i] |= fock_bit(j);
    for (int j = i + 1; j < total; ++j) masks[i] |= fock_bit(j);
  }
  return masks;
}

}  // namespace

MonomialOperator monomial(const MajoranaLabel& label) {
  if (label.modes() % 2 != 0) {
    throw std::invalid_argument("doubled-system label must have an even mode count");
  }
  return monomial_with_strings(label, string_masks(label.modes() / 2));
}

Matrix majorana_operator(int j, int modes_per_side) {
  return doubled::monomial(MajoranaLabel::Single(2 * modes_per_side, j)).dense();
}

Matrix lift_system_operator(const Matrix& op) {
  const int m = modes_from_dimension(op.rows());
  const Vector coeffs = majorana_coefficients(op);
  const double scale = 1.0 / std::sqrt(static_cast<double>(pow2(m)));
  const Eigen::Index dim = pow2(2 * m);
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& l : all_labels(m)) {
    const Complex c = coeffs(static_cast<Eigen::Index>(l.index()));
    if (std::abs(c) == 0.0) continue;
    const MonomialOperator lifted = doubled::monomial(l.embedded(0, 2 * m));
    for (Eigen::Index k = 0; k < dim; ++k) out(lifted.target[k], k) += c * scale * lifted.coeff[k];
  }
  return out;
}

Vector max_entangled(int modes_per_side) {
  const Eigen::Index d = pow2(modes_per_side);
  Vector phi = Vector::Zero(d * d);
  for (Eigen::Index n = 0; n < d; ++n) phi(n * d + n) = 1.0;
  return phi;
}

Matrix parity(int modes_per_side) { return parity_operator(2 * modes_per_side); }

}  // namespace doubled

SrMapReport is_sr_valid_map(const ProcessRep& p, double tol) {
  const int m = p.modes();
  SrMapReport r;
  const Matrix choi = choi_matrix(p);
  r.choi.name = "sr_choi_commutator";
  r.choi.violation = commutator_norm(doubled::parity(m), choi);
  r.choi.passed = r.choi.violation <= tol;

  const Matrix chi = chi_matrix(p);
  r.chi.name = "sr_chi_blocks";
  r.chi.violation = off_block_magnitude(chi, m);
  r.chi.passed = r.chi.violation <= tol;

  const Matrix transfer = transfer_matrix_complex(p);
  r.transfer.name = "sr_transfer_blocks";
  r.transfer.violation = off_block_magnitude(transfer, m);
  r.transfer.passed = r.transfer.violation <= tol;
  return r;
}

bool MapReport::consistent() const {
  return sr.consistent() && cp_choi.passed == cp_chi.passed &&
         tp_choi.passed == tp_chi.passed && tp_chi.passed == tp_transfer.passed &&
         unital_choi.passed == unital_transfer.passed;
}

std::vector<Check> MapReport::checks() const {
  return {sr.choi,  sr.chi,          sr.transfer,  cp_choi,        cp_chi,
          tp_choi,  tp_chi,          tp_transfer,  unital_choi,    unital_transfer};
}

MapReport validate_map(const ProcessRep& p, double tol) {
  const int m = p.modes();
  const Eigen::Index d = pow2(m);
  MapReport r;
  r.sr = is_sr_valid_map(p, tol);

  const Matrix choi = choi_matrix(p);
  const Matrix chi = chi_matrix(p);
  const Matrix transfer = transfer_matrix_complex(p);
  const double psd_tol = std::max(tol, kPsdThreshold);

  auto psd_check = [&](const char* name, const Matrix& x) {
    Check c{name, false, 0.0};
    const double herm = hermiticity_violation(x);
    const double neg = std::max(0.0, -min_eigenvalue(x));
    c.violation = std::max(herm, neg);
    c.passed = herm <= tol && neg <= psd_tol;
    return c;
  };
  r.cp_choi = psd_check("cp_choi_psd", choi);
  r.cp_chi = psd_check("cp_chi_psd", chi);

  const Matrix identity = Matrix::Identity(d, d);
  r.tp_choi.name = "tp_choi_partial_trace";
  r.tp_choi.violation = max_abs(partial_trace_first(choi, d, d) - identity);
  r.tp_choi.passed = r.tp_choi.violation <= tol;

  // sum chi_{u,u'} C_{u'} C_u, accumulated exactly in the label basis.
  Vector s = Vector::Zero(d * d);
  for (const auto& u : all_labels(m)) {
    for (const auto& up : all_labels(m)) {
      const Complex c = chi(static_cast<Eigen::Index>(u.index()), static_cast<Eigen::Index>(up.index()));
      if (c == Complex(0.0)) continue;
      const PhasedLabel prod = product(up, u);
      s(static_cast<Eigen::Index>(prod.label.index())) += c * prod.phase.value();
    }
  }
  s(0) -= 1.0;
  r.tp_chi.name = "tp_chi_completeness";
  r.tp_chi.violation = max_abs(from_majorana_coefficients(s * std::sqrt(static_cast<double>(d))));
  r.tp_chi.passed = r.tp_chi.violation <= tol;
  r.chi_trace = chi.trace();

  Matrix unit_row = Matrix::Zero(1, transfer.cols());
  unit_row(0, 0) = 1.0;
  r.tp_transfer.name = "tp_transfer_row0";
  r.tp_transfer.violation = max_abs(Matrix(transfer.row(0) - unit_row));
  r.tp_transfer.passed = r.tp_transfer.violation <= tol;

  r.unital_choi.name = "unital_choi_partial_trace";
  r.unital_choi.violation = max_abs(partial_trace_second(choi, d, d) - identity);
  r.unital_choi.passed = r.unital_choi.violation <= tol;

  r.unital_transfer.name = "unital_transfer_col0";
  r.unital_transfer.violation = max_abs(Matrix(transfer.col(0) - unit_row.transpose()));
  r.unital_transfer.passed = r.unital_transfer.violation <= tol;
  return r;
}

ProcessRep embed_process(const ProcessRep& p, int first_mode, int total_modes, double tol) {
  const SrMapReport sr = is_sr_valid_map(p, tol);
  if (!sr.valid()) {
    throw std::invalid_argument("refusing to extend a map that violates the superselection rule");
  }
  const int m = p.modes();
  const Matrix chi = chi_matrix(p);
  const Eigen::Index n = pow2(2 * total_modes);
  Matrix out = Matrix::Zero(n, n);
  for (const auto& u : all_labels(m)) {
    const auto row = static_cast<Eigen::Index>(u.embedded(first_mode, total_modes).index());
    for (const auto& v : all_labels(m)) {
      const auto col = static_cast<Eigen::Index>(v.embedded(first_mode, total_modes).index());
      out(row, col) = chi(static_cast<Eigen::Index>(u.index()), static_cast<Eigen::Index>(v.index()));
    }
  }
  return ProcessRep::FromChi(std::move(out));
}

ProcessRep extend_to_composite(const ProcessRep& p, int extra_modes, double tol) {
  if (extra_modes < 0) throw std::invalid_argument("extra mode count must be non-negative");
  return embed_process(p, 0, p.modes() + extra_modes, tol);
}

ProcessRep compose(const ProcessRep& second, const ProcessRep& first) {
  if (second.modes() != first.modes()) {
    throw std::invalid_argument("compose: maps act on different mode counts");
  }
  return ProcessRep::FromTransfer(transfer_matrix(second) * transfer_matrix(first));
}

}  // namespace fermitomo
