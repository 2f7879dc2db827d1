// Copyright (c) 2026 The eqdist authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace eqdist {

/// Counter-based splittable PRNG (splitmix64 output function).
///
/// A stream is (key, counter); output i is a pure function of both, so the
/// i-th draw of a stream never depends on how many values other streams have
/// produced. substream(id) derives an independently keyed stream; trial k of
/// seed s uses RngStream(s).substream(...ids...), which makes parallel Monte
/// Carlo reproducible independent of scheduling.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : key_(derive(0x6a09e667f3bcc909ULL, seed)) {}

  RngStream substream(std::uint64_t id) const {
    RngStream s(*this);
    s.key_ = derive(key_, id);
    s.counter_ = 0;
    return s;
  }

  std::uint64_t next_u64() {
    std::uint64_t x = key_ + (++counter_) * 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  /// Uniform on the open interval (0, 1); safe as inverse-CDF input.
  double next_unit() {
    const std::uint64_t bits = next_u64() >> 11;  // 53 bits
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  bool next_bit() { return (next_u64() >> 63) != 0; }

  std::uint64_t state_key() const { return key_; }
  std::uint64_t state_counter() const { return counter_; }

 private:
  static std::uint64_t derive(std::uint64_t key, std::uint64_t id) {
    // murmur3-style finalizer over (key, id); distinct from the output mixer.
    std::uint64_t h = key ^ (id + 0x9e3779b97f4a7c15ULL + (key << 6) + (key >> 2));
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    h *= 0xc4ceb9fe1a85ec53ULL;
    h ^= h >> 33;
    return h;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace eqdist
