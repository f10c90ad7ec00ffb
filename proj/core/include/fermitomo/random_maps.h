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

#ifndef FERMITOMO_RANDOM_MAPS_H_
#define FERMITOMO_RANDOM_MAPS_H_

#include <cstdint>

#include "fermitomo/process.h"

namespace fermitomo {

enum class RandomMapKind {
  /// exp(i H) with H a random real combination of even Majorana products.
  kUnitary,
  /// Random block-diagonal PSD chi, TP-corrected through its Kraus set.
  kCptp,
};

/// Deterministic per seed. The result is SR-valid, CP and TP.
ProcessRep random_valid_map(int modes, std::uint64_t seed, RandomMapKind kind);

/// Random SR-valid density matrix (a random state projected onto a fixed
/// parity sector mixture).
Matrix random_valid_state(int modes, std::uint64_t seed);

/// Random Hermitian matrix with unit trace (not necessarily PSD or SR-valid).
Matrix random_hermitian_unit_trace(int modes, std::uint64_t seed);

}  // namespace fermitomo

#endif  // FERMITOMO_RANDOM_MAPS_H_
