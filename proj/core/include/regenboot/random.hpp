// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string_view>

namespace regenboot {

// ---------------------------------------------------------------------------
// Counter-based generator and deterministic stream derivation.
//
// Every random number in the harness comes from Philox4x64-10 (Salmon et al.,
// "Parallel random numbers: as easy as 1, 2, 3"). A stream is identified by a
// 128-bit Philox key {label_key, index}; block b of the stream is the Philox
// output for counter {b, 0, 0, 0}, consumed word 0 first.
//
// Streams are derived from 64-bit seed material by
//
//   label_key = mix64(parent ^ fnv1a64(label))
//   key       = {label_key, index}
//   material  = mix64(label_key ^ mix64(index + 0x9E3779B97F4A7C15))
//
// where mix64 is the SplitMix64 finalizer and fnv1a64 is 64-bit FNV-1a over
// the UTF-8 bytes of the label. `material` is the parent for nested streams.
// ---------------------------------------------------------------------------

namespace detail {
__extension__ typedef unsigned __int128 uint128;
}  // namespace detail

using PhiloxCounter = std::array<std::uint64_t, 4>;
using PhiloxKey = std::array<std::uint64_t, 2>;
using PhiloxBlock = std::array<std::uint64_t, 4>;

/// One Philox4x64 block with 10 rounds.
constexpr PhiloxBlock philox4x64_10(PhiloxCounter ctr, PhiloxKey key) noexcept {
  constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
  constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
  constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
  constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;
  for (int round = 0; round < 10; ++round) {
    const detail::uint128 p0 = static_cast<detail::uint128>(kMul0) * ctr[0];
    const detail::uint128 p1 = static_cast<detail::uint128>(kMul1) * ctr[2];
    const auto hi0 = static_cast<std::uint64_t>(p0 >> 64);
    const auto lo0 = static_cast<std::uint64_t>(p0);
    const auto hi1 = static_cast<std::uint64_t>(p1 >> 64);
    const auto lo1 = static_cast<std::uint64_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

/// SplitMix64 output finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// 64-bit FNV-1a.
constexpr std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

/// Identity of one independent random stream.
struct StreamKey {
  std::uint64_t label_key = 0;
  std::uint64_t index = 0;

  /// Seed material for streams nested under this one.
  constexpr std::uint64_t material() const noexcept {
    return mix64(label_key ^ mix64(index + 0x9E3779B97F4A7C15ULL));
  }

  friend constexpr bool operator==(const StreamKey&, const StreamKey&) = default;
};

constexpr StreamKey derive_stream(std::uint64_t parent, std::string_view label,
                                  std::uint64_t index) noexcept {
  return StreamKey{mix64(parent ^ fnv1a64(label)), index};
}

/// Shorthand for `derive_stream(parent, label, index).material()`.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::string_view label,
                                    std::uint64_t index) noexcept {
  return derive_stream(parent, label, index).material();
}

/// A sequential view over one Philox stream. Satisfies
/// std::uniform_random_bit_generator, but the harness only uses the
/// portable draws below so results do not depend on the standard library.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(StreamKey key) noexcept : key_{key.label_key, key.index} {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() noexcept { return next_u64(); }

  std::uint64_t next_u64() noexcept {
    if (pos_ == buffer_.size()) {
      buffer_ = philox4x64_10({block_++, 0, 0, 0}, key_);
      pos_ = 0;
    }
    return buffer_[pos_++];
  }

  /// Bits come from whole words, least significant bit first. A fresh word
  /// is fetched only once the previous 64 bits are used up.
  bool next_bit() noexcept {
    if (bits_left_ == 0) {
      bits_ = next_u64();
      bits_left_ = 64;
    }
    const bool bit = (bits_ & 1U) != 0;
    bits_ >>= 1;
    --bits_left_;
    return bit;
  }

  /// Uniform integer in [0, bound) by Lemire's multiply-and-reject method.
  /// `bound` must be positive.
  std::uint64_t uniform_below(std::uint64_t bound) noexcept {
    detail::uint128 m = static_cast<detail::uint128>(next_u64()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<detail::uint128>(next_u64()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  PhiloxKey key_;
  std::uint64_t block_ = 0;
  PhiloxBlock buffer_{};
  std::size_t pos_ = 4;
  std::uint64_t bits_ = 0;
  unsigned bits_left_ = 0;
};

}  // namespace regenboot
