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

#include <cstddef>

namespace weyl {

// Process-wide tuning knobs. Change them before starting computations; they
// are read without synchronization.
struct Settings {
  // Polynomial products with a factor shorter than this use schoolbook.
  std::size_t karatsuba_threshold = 32;
  // Prime-field products of at least this length use the multi-prime NTT.
  bool use_ntt = true;
  std::size_t ntt_threshold = 64;
  // Rational products with both factors at least this long clear
  // denominators and use a single big-integer product.
  bool use_kronecker = true;
  std::size_t kronecker_threshold = 8;
  // Matrix products with a dimension at or below this use schoolbook.
  std::size_t strassen_threshold = 64;
  // mul() takes the naive route when min(d, r) <= naive_min_order or
  // d * r <= naive_max_area.
  std::size_t naive_min_order = 4;
  std::size_t naive_max_area = 256;
  // When the characteristic is too small for the fast route, mul() in auto
  // mode falls back to naive_mul if d * r does not exceed this.
  std::size_t naive_fallback_area = 4096;
  // Worker threads for the independent per-block stages.
  unsigned threads = 1;
};

Settings& settings() noexcept;

// Restores the previous settings on scope exit.
class ScopedSettings {
 public:
  ScopedSettings() : saved_(settings()) {}
  ~ScopedSettings() { settings() = saved_; }
  ScopedSettings(const ScopedSettings&) = delete;
  ScopedSettings& operator=(const ScopedSettings&) = delete;

 private:
  Settings saved_;
};

}  // namespace weyl
