// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

namespace swapnet {

// Counter-based generator: Philox4x64 with 10 rounds. The key is
// (seed, stream), the counter advances one block per 4 outputs, so any
// (seed, stream) pair yields the same sequence on every platform and
// parallel work items can own disjoint streams without coordination.
std::array<std::uint64_t, 4> philox4x64(std::array<std::uint64_t, 4> counter,
                                        std::array<std::uint64_t, 2> key);

class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_{seed, stream} {}

  std::uint64_t seed() const { return key_[0]; }
  std::uint64_t stream() const { return key_[1]; }

  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform();

  // Standard normal via Box-Muller; consumes two uniforms per call.
  double normal();

  // Uniform integer in [0, n); rejection sampling keeps it unbiased.
  std::uint64_t below(std::uint64_t n);

 private:
  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_{0, 0, 0, 0};
  std::array<std::uint64_t, 4> block_{};
  int cursor_ = 4;  // empty buffer
};

// Deterministic stream id from a list of tags/indices (splitmix64 fold).
// Used to give every parallel work item its own Rng stream.
std::uint64_t stream_id(std::initializer_list<std::uint64_t> parts);

}  // namespace swapnet
