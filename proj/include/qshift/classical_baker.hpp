// Copyright 2026 The qshift developers
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

#pragma once

#include <stdexcept>
#include <utility>

#include "qshift/baker.hpp"

namespace qshift {

/// One step of the classical baker transformation on the unit square.
/// Standard stacking sends the stretched left half to the bottom; the
/// reverse-stacked variant puts it on top, fixing the lower-right corner.
/// In binary digits the standard map is the left shift: q = 0.a0a1a2...,
/// p = 0.a-1a-2... maps to q' = 0.a1a2..., p' = 0.a0a-1a-2...
/// The boundary q = 1/2 belongs to the second branch for the standard map
/// and to the first branch for the reverse-stacked one.
inline std::pair<double, double> classical_baker_step(double q, double p, BakerKind kind) {
  if (!(q >= 0.0 && q < 1.0 && p >= 0.0 && p < 1.0))
    throw std::invalid_argument("classical_baker_step: point outside the unit square");
  if (kind == BakerKind::standard) {
    if (q < 0.5) return {2.0 * q, p / 2.0};
    return {2.0 * q - 1.0, (p + 1.0) / 2.0};
  }
  if (q <= 0.5) return {2.0 * q, (p + 1.0) / 2.0};
  return {2.0 * q - 1.0, p / 2.0};
}

}  // namespace qshift
