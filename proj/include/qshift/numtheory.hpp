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

/// Modular arithmetic services: modular exponentiation, multiplicative order
/// of 2, and the fidelity-shoulder prediction built on them.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qshift {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

/// base^exp mod modulus by square-and-multiply.
inline std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus) {
  if (modulus < 2) throw std::invalid_argument("mod_pow: modulus must be >= 2");
  std::uint64_t acc = 1 % modulus;
  std::uint64_t b = base % modulus;
  while (exp > 0) {
    if (exp & 1) acc = mul_mod(acc, b, modulus);
    b = mul_mod(b, b, modulus);
    exp >>= 1;
  }
  return acc;
}

/// Multiplicative order of `base` mod an odd modulus, plus whether the
/// half-order power is -1 (the condition under which S^{k0/2} equals the
/// almost-parity operator R').
struct OrderInfo {
  std::uint64_t modulus = 0;
  std::uint64_t order = 0;
  bool half_order_is_minus_one = false;
};

/// Brute-force doubling scan; the order exists because gcd(base, modulus)=1
/// is implied for base=2 and odd modulus. Intended for desk-scale moduli.
inline OrderInfo multiplicative_order(std::uint64_t modulus, std::uint64_t base = 2) {
  if (modulus < 3 || modulus % 2 == 0)
    throw std::invalid_argument("multiplicative_order: modulus must be odd and >= 3");
  OrderInfo info;
  info.modulus = modulus;
  std::uint64_t cur = base % modulus;
  std::uint64_t k = 1;
  while (cur != 1) {
    cur = mul_mod(cur, base, modulus);
    ++k;
    if (k > modulus)
      throw std::domain_error("multiplicative_order: no order found (base not coprime?)");
  }
  info.order = k;
  if (k % 2 == 0)
    info.half_order_is_minus_one = (mod_pow(base, k / 2, modulus) == modulus - 1);
  return info;
}

/// Time of the first fidelity shoulder for Hilbert dimension N: k0(N-1)/2
/// when 2^{k0/2} = -1 mod (N-1), else k0(N-1).
inline std::uint64_t predict_shoulder(std::size_t n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("predict_shoulder: N must be even and >= 4");
  const OrderInfo info = multiplicative_order(static_cast<std::uint64_t>(n - 1));
  return info.half_order_is_minus_one ? info.order / 2 : info.order;
}

}  // namespace qshift
