// Copyright 2026 The abclab Authors
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

#include <cstdint>

namespace abclab {

/// splitmix64 finalizer. Used to derive stream ids; full-avalanche, cheap.
std::uint64_t mix64(std::uint64_t x);

/// Order-dependent combine of two 64-bit values through mix64.
std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b);

/// Counter-based random stream (Philox 4x32-10, Salmon et al. 2011).
///
/// Every output is a pure function of (seed, stream_id, counter), so two
/// streams constructed with the same (seed, stream_id) replay the same
/// sequence regardless of thread, execution order, or what other streams
/// did in between. Parallel code hands each unit of work its own child
/// stream instead of sharing one generator.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : seed_(seed), stream_id_(stream_id) {}

  std::uint64_t next_u64();

  /// Uniform draw strictly inside (0, 1).
  double next_uniform();

  /// Standard normal via Box-Muller; consumes two uniforms per call.
  double next_normal();

  /// Independent derived stream: same seed, stream id mixed from
  /// (stream_id, a, b). Used e.g. as child(replicate, draw).
  RngStream child(std::uint64_t a, std::uint64_t b = 0) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t counter_ = 0;  // counts 64-bit outputs
  // cached Philox block (two 64-bit words per block)
  std::uint64_t block_index_ = ~0ULL;
  std::uint64_t block_[2] = {0, 0};
};

}  // namespace abclab
