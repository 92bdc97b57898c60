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

#include <algorithm>
#include <array>
#include <bit>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "weyl/detail/modular_kernels.hpp"
#include "weyl/settings.hpp"

namespace weyl::detail {
namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 add_mod(u64 a, u64 b, u64 p) {
  const u64 s = a + b;
  return s >= p ? s - p : s;
}

u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 mul_mod_word(u64 a, u64 b, u64 p) {
  return p <= 0xffffffffULL ? a * b % p : static_cast<u64>(static_cast<u128>(a) * b % p);
}

// The modulus is a template parameter so `% Mod` compiles to multiply-shift.
template <u32 Mod, u32 Generator, int MaxLog>
struct NttPrime {
  static constexpr u32 kMod = Mod;
  static constexpr int kMaxLog = MaxLog;

  static u32 mul(u32 a, u32 b) { return static_cast<u32>(static_cast<u64>(a) * b % Mod); }

  static u32 pow(u32 a, u64 e) {
    u32 r = 1;
    while (e != 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  // Montgomery arithmetic with R = 2^32. Operands stay in plain form; the
  // tables hold w * R, so mmul(x, table) = x * w, and the stray 1/R from
  // the pointwise product is folded into the final scaling.
  static constexpr u32 neg_inverse() {
    u32 inv = Mod;
    for (int i = 0; i < 5; ++i) inv *= 2 - Mod * inv;
    return static_cast<u32>(0) - inv;
  }
  static constexpr u32 kNegInv = neg_inverse();
  static constexpr u32 kR2 = static_cast<u32>((static_cast<u128>(1) << 64) % Mod);

  static u32 mmul(u32 a, u32 b) {
    const u64 t = static_cast<u64>(a) * b;
    const u32 m = static_cast<u32>(t) * kNegInv;
    const u32 r = static_cast<u32>((t + static_cast<u64>(m) * Mod) >> 32);
    return r >= Mod ? r - Mod : r;
  }
  static u32 to_mont(u32 a) { return mmul(a, kR2); }

  // Root tables for every level up to the largest size requested so far:
  // entry half + k is w_len^k (or its inverse) with len = 2 * half. Grown
  // under a lock and published as immutable snapshots.
  struct Tables {
    std::vector<u32> forward;
    std::vector<u32> inverse;
  };

  static std::shared_ptr<const Tables> tables(std::size_t n) {
    static std::mutex mutex;
    static std::shared_ptr<const Tables> current = std::make_shared<Tables>();
    std::lock_guard<std::mutex> lock(mutex);
    if (current->forward.size() >= n) return current;
    auto t = std::make_shared<Tables>();
    t->forward.assign(n, 1);
    t->inverse.assign(n, 1);
    for (std::size_t half = 1; half < n; half <<= 1) {
      const u32 w = pow(Generator, (Mod - 1) / (2 * half));
      const u32 wi = pow(w, Mod - 2);
      u32 f = 1, g = 1;
      for (std::size_t k = 0; k < half; ++k) {
        t->forward[half + k] = to_mont(f);
        t->inverse[half + k] = to_mont(g);
        f = mul(f, w);
        g = mul(g, wi);
      }
    }
    current = t;
    return current;
  }

  // Decimation in frequency: natural order in, bit-reversed order out.
  static void forward(std::vector<u32>& a, const u32* roots) {
    const std::size_t n = a.size();
    for (std::size_t half = n >> 1; half >= 1; half >>= 1) {
      const u32* w = roots + half;
      for (std::size_t start = 0; start < n; start += 2 * half) {
        u32* x = a.data() + start;
        u32* y = x + half;
        for (std::size_t k = 0; k < half; ++k) {
          const u32 u = x[k], v = y[k];
          const u32 s = u + v;
          x[k] = s >= Mod ? s - Mod : s;
          y[k] = mmul(u >= v ? u - v : u + Mod - v, w[k]);
        }
      }
    }
  }

  // Decimation in time with inverse roots: bit-reversed in, natural out.
  static void inverse(std::vector<u32>& a, const u32* roots) {
    const std::size_t n = a.size();
    for (std::size_t half = 1; half < n; half <<= 1) {
      const u32* w = roots + half;
      for (std::size_t start = 0; start < n; start += 2 * half) {
        u32* x = a.data() + start;
        u32* y = x + half;
        for (std::size_t k = 0; k < half; ++k) {
          const u32 u = x[k], v = mmul(y[k], w[k]);
          const u32 s = u + v;
          x[k] = s >= Mod ? s - Mod : s;
          y[k] = u >= v ? u - v : u + Mod - v;
        }
      }
    }
    // Undoes 1/n and the 1/R left by the pointwise Montgomery product.
    const u32 scale = to_mont(to_mont(pow(static_cast<u32>(n % Mod), Mod - 2)));
    for (auto& x : a) x = mmul(x, scale);
  }

  static std::vector<u32> convolve(std::span<const u64> a, std::span<const u64> b) {
    const std::size_t out = a.size() + b.size() - 1;
    const std::size_t n = std::bit_ceil(out);
    std::vector<u32> fa(n, 0), fb(n, 0);
    for (std::size_t i = 0; i < a.size(); ++i) fa[i] = static_cast<u32>(a[i] % Mod);
    for (std::size_t i = 0; i < b.size(); ++i) fb[i] = static_cast<u32>(b[i] % Mod);
    const auto t = tables(n);
    forward(fa, t->forward.data());
    forward(fb, t->forward.data());
    for (std::size_t i = 0; i < n; ++i) fa[i] = mmul(fa[i], fb[i]);
    inverse(fa, t->inverse.data());
    fa.resize(out);
    return fa;
  }
};

using Prime0 = NttPrime<998244353u, 3u, 23>;
using Prime1 = NttPrime<167772161u, 3u, 25>;
using Prime2 = NttPrime<469762049u, 3u, 26>;
using Prime3 = NttPrime<754974721u, 11u, 24>;
using Prime4 = NttPrime<1004535809u, 3u, 21>;

constexpr std::array<u64, 5> kPrimes = {Prime0::kMod, Prime1::kMod, Prime2::kMod, Prime3::kMod,
                                        Prime4::kMod};
// floor(log2) of each prime and the largest supported transform size.
constexpr std::array<int, 5> kPrimeBits = {29, 27, 28, 29, 29};
constexpr std::array<int, 5> kPrimeMaxLog = {Prime0::kMaxLog, Prime1::kMaxLog, Prime2::kMaxLog,
                                             Prime3::kMaxLog, Prime4::kMaxLog};

// Number of primes needed for a product of lengths la, lb modulo p; 0 when
// the transform cannot handle it.
std::size_t primes_needed(std::size_t la, std::size_t lb, u64 p) {
  if (la == 0 || lb == 0) return 0;
  const int needed = std::bit_width(std::min(la, lb)) + 2 * std::bit_width(p - 1);
  const std::size_t out = la + lb - 1;
  const int log_n = std::bit_width(std::bit_ceil(out)) - 1;
  int have = 0;
  int max_log = 64;
  for (std::size_t i = 0; i < kPrimes.size(); ++i) {
    have += kPrimeBits[i];
    max_log = std::min(max_log, kPrimeMaxLog[i]);
    if (log_n > max_log) return 0;
    if (have >= needed) return i + 1;
  }
  return 0;
}

// Garner reconstruction x = v0 + v1 m0 + v2 m0 m1 + ... followed by a
// reduction mod p. Count is a template parameter so every modulus is a
// compile-time constant inside the unrolled loops.
template <std::size_t Count>
std::vector<u64> garner(const std::array<std::vector<u32>, 5>& residues, std::size_t out, u64 p) {
  constexpr auto inv = [] {
    std::array<std::array<u64, 5>, 5> t{};
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        // m_j^{-1} mod m_i by Fermat.
        u64 r = 1, b = kPrimes[j] % kPrimes[i], e = kPrimes[i] - 2;
        while (e != 0) {
          if (e & 1) r = r * b % kPrimes[i];
          b = b * b % kPrimes[i];
          e >>= 1;
        }
        t[i][j] = r;
      }
    }
    return t;
  }();
  std::array<u64, Count> radix{};
  radix[0] = 1 % p;
  for (std::size_t i = 1; i < Count; ++i) radix[i] = mul_mod_word(radix[i - 1], kPrimes[i - 1] % p, p);

  // With p < 2^32 and at most three terms of size < 2^30 * 2^32 the sum fits
  // in 64 bits.
  const bool narrow = p <= 0xffffffffULL && Count <= 3;
  std::vector<u64> result(out);
  for (std::size_t k = 0; k < out; ++k) {
    std::array<u64, Count> v{};
#pragma GCC unroll 5
    for (std::size_t i = 0; i < Count; ++i) {
      u64 t = residues[i][k];
#pragma GCC unroll 5
      for (std::size_t j = 0; j < i; ++j) t = (t + kPrimes[i] - v[j] % kPrimes[i]) * inv[i][j] % kPrimes[i];
      v[i] = t;
    }
    if (narrow) {
      u64 acc = 0;
      for (std::size_t i = 0; i < Count; ++i) acc += v[i] * radix[i];
      result[k] = acc % p;
    } else {
      u128 acc = 0;
      for (std::size_t i = 0; i < Count; ++i) acc += static_cast<u128>(v[i]) * radix[i];
      result[k] = static_cast<u64>(acc % p);
    }
  }
  return result;
}

}  // namespace

std::vector<u64> mul_mod_schoolbook(std::span<const u64> a, std::span<const u64> b, u64 p) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out = a.size() + b.size() - 1;
  std::vector<u64> result(out, 0);
  if (p <= 0xffffffffULL) {
    // Each product is < 2^64, so a 128-bit accumulator never overflows.
    std::vector<u128> acc(out, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<u128>(a[i] * b[j]);
    }
    for (std::size_t k = 0; k < out; ++k) result[k] = static_cast<u64>(acc[k] % p);
    return result;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      result[i + j] = add_mod(result[i + j], mul_mod_word(a[i], b[j], p), p);
    }
  }
  return result;
}

std::vector<u64> mul_mod_karatsuba(std::span<const u64> a, std::span<const u64> b, u64 p,
                                   std::size_t threshold) {
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  if (nb == 0) return {};
  if (nb < std::max<std::size_t>(threshold, 2)) return mul_mod_schoolbook(a, b, p);

  std::vector<u64> result(na + nb - 1, 0);
  if (nb <= na / 2) {
    for (std::size_t off = 0; off < na; off += nb) {
      const auto piece = a.subspan(off, std::min(nb, na - off));
      const auto prod = mul_mod_karatsuba(piece, b, p, threshold);
      for (std::size_t k = 0; k < prod.size(); ++k) result[off + k] = add_mod(result[off + k], prod[k], p);
    }
    return result;
  }

  const std::size_t m = na / 2;
  const auto a0 = a.first(m), a1 = a.subspan(m);
  const auto b0 = b.first(m), b1 = b.subspan(m);
  std::vector<u64> sa(std::max(a0.size(), a1.size()), 0), sb(std::max(b0.size(), b1.size()), 0);
  for (std::size_t i = 0; i < a0.size(); ++i) sa[i] = a0[i];
  for (std::size_t i = 0; i < a1.size(); ++i) sa[i] = add_mod(sa[i], a1[i], p);
  for (std::size_t i = 0; i < b0.size(); ++i) sb[i] = b0[i];
  for (std::size_t i = 0; i < b1.size(); ++i) sb[i] = add_mod(sb[i], b1[i], p);

  const auto z0 = mul_mod_karatsuba(a0, b0, p, threshold);
  const auto z2 = mul_mod_karatsuba(a1, b1, p, threshold);
  auto z1 = mul_mod_karatsuba(sa, sb, p, threshold);
  for (std::size_t k = 0; k < z0.size(); ++k) z1[k] = sub_mod(z1[k], z0[k], p);
  for (std::size_t k = 0; k < z2.size(); ++k) z1[k] = sub_mod(z1[k], z2[k], p);

  for (std::size_t k = 0; k < z0.size(); ++k) result[k] = add_mod(result[k], z0[k], p);
  for (std::size_t k = 0; k < z1.size() && m + k < result.size(); ++k) {
    result[m + k] = add_mod(result[m + k], z1[k], p);
  }
  for (std::size_t k = 0; k < z2.size(); ++k) result[2 * m + k] = add_mod(result[2 * m + k], z2[k], p);
  return result;
}

bool ntt_supported(std::size_t la, std::size_t lb, u64 p) noexcept { return primes_needed(la, lb, p) != 0; }

std::vector<u64> mul_mod_ntt(std::span<const u64> a, std::span<const u64> b, u64 p) {
  const std::size_t count = primes_needed(a.size(), b.size(), p);
  if (count == 0) throw std::length_error("product too large for the NTT prime set");
  const std::size_t out = a.size() + b.size() - 1;

  std::array<std::vector<u32>, 5> residues;
  residues[0] = Prime0::convolve(a, b);
  if (count > 1) residues[1] = Prime1::convolve(a, b);
  if (count > 2) residues[2] = Prime2::convolve(a, b);
  if (count > 3) residues[3] = Prime3::convolve(a, b);
  if (count > 4) residues[4] = Prime4::convolve(a, b);

  switch (count) {
    case 1: return garner<1>(residues, out, p);
    case 2: return garner<2>(residues, out, p);
    case 3: return garner<3>(residues, out, p);
    case 4: return garner<4>(residues, out, p);
    default: return garner<5>(residues, out, p);
  }
}

std::vector<u64> mul_mod(std::span<const u64> a, std::span<const u64> b, u64 p) {
  if (a.empty() || b.empty()) return {};
  const auto& cfg = settings();
  const std::size_t shortest = std::min(a.size(), b.size());
  if (shortest < cfg.karatsuba_threshold) return mul_mod_schoolbook(a, b, p);
  if (cfg.use_ntt && shortest >= cfg.ntt_threshold && ntt_supported(a.size(), b.size(), p)) {
    return mul_mod_ntt(a, b, p);
  }
  return mul_mod_karatsuba(a, b, p, cfg.karatsuba_threshold);
}

}  // namespace weyl::detail
