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

#include "abclab/rng.hpp"

#include <cmath>

namespace abclab {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

inline void philox_round(std::uint32_t ctr[4], const std::uint32_t key[2]) {
  std::uint32_t hi0, lo0, hi1, lo1;
  mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
  mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
  const std::uint32_t out[4] = {hi1 ^ ctr[1] ^ key[0], lo1,
                                hi0 ^ ctr[3] ^ key[1], lo0};
  ctr[0] = out[0];
  ctr[1] = out[1];
  ctr[2] = out[2];
  ctr[3] = out[3];
}

// 10-round Philox 4x32 keyed by the 64-bit seed; the 128-bit counter holds
// (block index, stream id).
inline void philox_block(std::uint64_t seed, std::uint64_t stream,
                         std::uint64_t block, std::uint64_t out[2]) {
  std::uint32_t ctr[4] = {
      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32),
      static_cast<std::uint32_t>(stream),
      static_cast<std::uint32_t>(stream >> 32)};
  std::uint32_t key[2] = {static_cast<std::uint32_t>(seed),
                          static_cast<std::uint32_t>(seed >> 32)};
  for (int r = 0; r < 10; ++r) {
    philox_round(ctr, key);
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  out[0] = static_cast<std::uint64_t>(ctr[0]) |
           (static_cast<std::uint64_t>(ctr[1]) << 32);
  out[1] = static_cast<std::uint64_t>(ctr[2]) |
           (static_cast<std::uint64_t>(ctr[3]) << 32);
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
  return mix64(a ^ (mix64(b) + 0x9E3779B97F4A7C15ULL + (a << 6) + (a >> 2)));
}

std::uint64_t RngStream::next_u64() {
  const std::uint64_t block = counter_ >> 1;
  if (block != block_index_) {
    philox_block(seed_, stream_id_, block, block_);
    block_index_ = block;
  }
  const std::uint64_t out = block_[counter_ & 1];
  ++counter_;
  return out;
}

double RngStream::next_uniform() {
  // top 53 bits, centred on the half-step so 0 and 1 are never returned
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::next_normal() {
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

RngStream RngStream::child(std::uint64_t a, std::uint64_t b) const {
  return RngStream(seed_, hash_combine(hash_combine(stream_id_, a), b));
}

}  // namespace abclab
