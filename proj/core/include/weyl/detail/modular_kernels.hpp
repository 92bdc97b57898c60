// Copyright 2026 The weylmul Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Word-level convolution kernels for residues modulo a prime p < 2^62.
// Inputs must already be reduced.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace weyl::detail {

std::vector<std::uint64_t> mul_mod_schoolbook(std::span<const std::uint64_t> a,
                                              std::span<const std::uint64_t> b, std::uint64_t p);

std::vector<std::uint64_t> mul_mod_karatsuba(std::span<const std::uint64_t> a,
                                             std::span<const std::uint64_t> b, std::uint64_t p,
                                             std::size_t threshold);

// True when the multi-prime transform can represent every coefficient of a
// product of lengths la, lb exactly before reduction modulo p.
bool ntt_supported(std::size_t la, std::size_t lb, std::uint64_t p) noexcept;

// Convolution over up to five NTT-friendly primes followed by Garner
// reconstruction modulo p. Requires ntt_supported.
std::vector<std::uint64_t> mul_mod_ntt(std::span<const std::uint64_t> a,
                                       std::span<const std::uint64_t> b, std::uint64_t p);

// Kernel selection driven by settings().
std::vector<std::uint64_t> mul_mod(std::span<const std::uint64_t> a,
                                   std::span<const std::uint64_t> b, std::uint64_t p);

}  // namespace weyl::detail
