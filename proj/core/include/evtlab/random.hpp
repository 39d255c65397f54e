// Copyright 2026 The evtlab Authors.
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

#ifndef EVTLAB_RANDOM_HPP_
#define EVTLAB_RANDOM_HPP_

#include <array>
#include <cstdint>
#include <limits>

namespace evt {

// Counter-based Philox4x32-10 block function. Pure: the same (counter, key)
// always produces the same block on every platform.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

/// A seeded random stream.
///
/// The stream is keyed by the 64-bit seed; the 64-bit stream id occupies the
/// upper half of the Philox counter, so streams derived from one seed never
/// overlap. A stream is single-owner: parallel workers must each derive their
/// own with `substream`.
///
/// Satisfies UniformRandomBitGenerator, but the samplers in this library only
/// use `next_u64` and `uniform` so that sequences do not depend on the
/// standard library's distribution implementations.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0)
      : seed_(seed), stream_id_(stream_id) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  RandomStream substream(std::uint64_t stream_id) const {
    return RandomStream(seed_, stream_id);
  }

  std::uint64_t next_u64();

  /// Uniform on the open interval (0, 1): 53 random bits, offset by half a
  /// step, so neither 0 nor 1 is ever returned.
  double uniform();

  /// Standard exponential draw computed as -log(1 - U) from `uniform`.
  double exponential();

  result_type operator()() { return next_u64(); }
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t block_index_ = 0;
  std::array<std::uint32_t, 4> block_{};
  int lane_ = 2;  // two 64-bit outputs per block; 2 means "refill"
};

}  // namespace evt

#endif  // EVTLAB_RANDOM_HPP_
