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

#include "fermitomo/majorana.h"

#include <bit>
#include <stdexcept>

namespace fermitomo {

namespace {

// Integer bit position of u_j inside a label index (u_1 is most significant).
int label_bit(int modes, int j) { return 2 * modes - j; }

void require_same_modes(const MajoranaLabel& a, const MajoranaLabel& b) {
  if (a.modes() != b.modes()) {
    throw std::invalid_argument("Majorana labels have different mode counts (" +
                                std::to_string(a.modes()) + " vs " + std::to_string(b.modes()) +
                                ")");
  }
}

}  // namespace

Complex Phase::value() const {
  switch (k_) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::string Phase::to_string() const {
  static const char* kNames[] = {"+1", "+i", "-1", "-i"};
  return kNames[k_];
}

MajoranaLabel::MajoranaLabel(int modes, std::uint64_t index) : modes_(modes), index_(index) {
  if (modes < 1 || modes > kMaxModes) {
    throw std::invalid_argument("mode count must be in [1, " + std::to_string(kMaxModes) + "]");
  }
  if (2 * modes < 64 && (index >> (2 * modes)) != 0) {
    throw std::invalid_argument("label index does not fit in 2m bits");
  }
}

MajoranaLabel MajoranaLabel::FromString(std::string_view bits) {
  if (bits.empty() || bits.size() % 2 != 0) {
    throw std::invalid_argument("label string must have even, nonzero length");
  }
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("label string must contain only 0/1");
    index = (index << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return MajoranaLabel(static_cast<int>(bits.size() / 2), index);
}

MajoranaLabel MajoranaLabel::FromBits(const std::vector<int>& bits) {
  std::string s;
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("label bits must be 0 or 1");
    s.push_back(b ? '1' : '0');
  }
  return FromString(s);
}

MajoranaLabel MajoranaLabel::Ones(int modes) {
  return MajoranaLabel(modes, (std::uint64_t{1} << (2 * modes)) - 1);
}

MajoranaLabel MajoranaLabel::Single(int modes, int j) {
  if (j < 1 || j > 2 * modes) throw std::out_of_range("Majorana index out of range");
  return MajoranaLabel(modes, std::uint64_t{1} << label_bit(modes, j));
}

bool MajoranaLabel::bit(int j) const {
  if (j < 1 || j > 2 * modes_) throw std::out_of_range("Majorana index out of range");
  return (index_ >> label_bit(modes_, j)) & 1u;
}

int MajoranaLabel::weight() const { return std::popcount(index_); }

MajoranaLabel MajoranaLabel::complement() const {
  return MajoranaLabel(modes_, index_ ^ Ones(modes_).index_);
}

MajoranaLabel MajoranaLabel::embedded(int first_mode, int total_modes) const {
  if (first_mode < 0 || first_mode + modes_ > total_modes) {
    throw std::invalid_argument("embedding does not fit in the target system");
  }
  const int trailing = total_modes - first_mode - modes_;
  return MajoranaLabel(total_modes, index_ << (2 * trailing));
}

std::string MajoranaLabel::to_string() const {
  std::string s;
  for (int j = 1; j <= 2 * modes_; ++j) s.push_back(bit(j) ? '1' : '0');
  return s;
}

MajoranaLabel MajoranaLabel::operator+(const MajoranaLabel& other) const {
  require_same_modes(*this, other);
  return MajoranaLabel(modes_, index_ ^ other.index_);
}

PhasedLabel product(const MajoranaLabel& a, const MajoranaLabel& b) {
  require_same_modes(a, b);
  // Moving each c_j of b leftwards past every c_k of a with k > j costs a sign.
  // Larger Majorana index means lower bit position.
  int swaps = 0;
  std::uint64_t rest = b.index();
  while (rest != 0) {
    const int pos = std::countr_zero(rest);
    rest &= rest - 1;
    swaps += std::popcount(a.index() & ((std::uint64_t{1} << pos) - 1));
  }
  const MajoranaLabel sum = a + b;
  const int quarter_turns =
      a.weight() / 2 + b.weight() / 2 - sum.weight() / 2 + 2 * (swaps % 2);
  return {Phase::FromQuarterTurns(quarter_turns), sum};
}

int commutation_sign(const MajoranaLabel& a, const MajoranaLabel& b) {
  require_same_modes(a, b);
  const int overlap = std::popcount(a.index() & b.index());
  return ((a.weight() * b.weight() + overlap) % 2 == 0) ? 1 : -1;
}

std::vector<MajoranaLabel> all_labels(int modes) {
  std::vector<MajoranaLabel> out;
  const std::uint64_t n = std::uint64_t{1} << (2 * modes);
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.emplace_back(modes, i);
  return out;
}

std::vector<MajoranaLabel> even_labels(int modes) {
  std::vector<MajoranaLabel> out;
  for (const auto& l : all_labels(modes)) {
    if (l.is_even()) out.push_back(l);
  }
  return out;
}

std::vector<MajoranaLabel> odd_labels(int modes) {
  std::vector<MajoranaLabel> out;
  for (const auto& l : all_labels(modes)) {
    if (!l.is_even()) out.push_back(l);
  }
  return out;
}

Matrix MonomialOperator::dense() const {
  Matrix out = Matrix::Zero(dim(), dim());
  for (Eigen::Index n = 0; n < dim(); ++n) out(target[n], n) = coeff[n];
  return out;
}

Matrix MonomialOperator::left_multiply(const Matrix& x) const {
  Matrix out(x.rows(), x.cols());
  for (Eigen::Index n = 0; n < dim(); ++n) out.row(target[n]) = coeff[n] * x.row(n);
  return out;
}

Matrix MonomialOperator::right_multiply(const Matrix& x) const {
  Matrix out(x.rows(), x.cols());
  for (Eigen::Index n = 0; n < dim(); ++n) out.col(n) = x.col(target[n]) * coeff[n];
  return out;
}

Complex MonomialOperator::trace_with(const Matrix& x) const {
  Complex sum = 0.0;
  for (Eigen::Index n = 0; n < dim(); ++n) sum += coeff[n] * x(n, target[n]);
  return sum;
}

MonomialOperator monomial_with_strings(const MajoranaLabel& label,
                                       const std::vector<std::uint32_t>& string_masks) {
  const int m = label.modes();
  if (static_cast<int>(string_masks.size()) != m) {
    throw std::invalid_argument("need one Z-string mask per mode");
  }
  const std::uint32_t dim = std::uint32_t{1} << m;
  MonomialOperator op;
  op.target.resize(dim);
  op.coeff.resize(dim);
  for (std::uint32_t n = 0; n < dim; ++n) {
    std::uint32_t state = n;
    int quarter_turns = 0;
    // Rightmost factor acts first.
    for (int j = 2 * m; j >= 1; --j) {
      if (!label.bit(j)) continue;
      const int mode = (j - 1) / 2;
      const std::uint32_t mode_bit = std::uint32_t{1} << (m - 1 - mode);
      if (std::popcount(state & string_masks[mode]) % 2 != 0) quarter_turns += 2;
      if (j % 2 == 0) {
        // Y|0> = i|1>, Y|1> = -i|0>.
        quarter_turns += (state & mode_bit) ? 3 : 1;
      }
      state ^= mode_bit;
    }
    quarter_turns += label.weight() / 2;
    op.target[n] = state;
    op.coeff[n] = Phase::FromQuarterTurns(quarter_turns).value();
  }
  return op;
}

MonomialOperator monomial(const MajoranaLabel& label) {
  const int m = label.modes();
  std::vector<std::uint32_t> masks(m);
  for (int i = 0; i < m; ++i) masks[i] = (std::uint32_t{1} << (m - 1 - i)) - 1;
  return monomial_with_strings(label, masks);
}

Matrix dense(const MajoranaLabel& label) { return monomial(label).dense(); }

Matrix majorana_operator(int j, int modes) { return dense(MajoranaLabel::Single(modes, j)); }

Matrix annihilation_operator(int i, int modes) {
  if (i < 1 || i > modes) throw std::out_of_range("fermion mode index out of range");
  return 0.5 * (majorana_operator(2 * i - 1, modes) +
                Complex(0.0, 1.0) * majorana_operator(2 * i, modes));
}

Matrix parity_operator(int modes) {
  if (modes < 1 || modes > kMaxModes) throw std::invalid_argument("invalid mode count");
  const Eigen::Index dim = Eigen::Index{1} << modes;
  Matrix c = Matrix::Zero(dim, dim);
  for (Eigen::Index n = 0; n < dim; ++n) c(n, n) = fock_parity(static_cast<std::uint64_t>(n));
  return c;
}

int modes_from_dimension(Eigen::Index dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two >= 2");
  }
  return std::countr_zero(static_cast<std::uint64_t>(dim));
}

}  // namespace fermitomo
