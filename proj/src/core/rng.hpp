// Copyright 2026 The shadowtomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>

namespace sht {

// Counter-based pseudo-random generator. The i-th output of a stream with key
// `k` is
//
//     out_i = mix64(k + (i + 1) * kGolden)
//
// where mix64 is the SplitMix64 finalizer (Steele, Lea & Flood 2014) and
// kGolden = floor(2^64 / phi). Any output is therefore a pure function of
// (key, counter), so streams can be split, replayed, and evaluated out of
// order on any platform. Substreams are derived with the same primitive:
// substream j of key k has key mix64(k + (j + 1) * kGolden), which decouples
// it from the parent outputs whenever it is consumed together with them.

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

inline std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

inline std::uint64_t stream_value(std::uint64_t key, std::uint64_t counter) {
    return mix64(key + (counter + 1) * kGolden);
}

inline std::uint64_t substream_key(std::uint64_t key, std::uint64_t index) {
    return stream_value(key, index);
}

/// Maps a 64-bit word to a double in [0, 1) with 53 random bits.
inline double unit_double(std::uint64_t word) {
    return static_cast<double>(word >> 11) * 0x1.0p-53;
}

class CounterRng {
   public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    std::uint64_t next_u64() { return stream_value(key_, counter_++); }

    /// Uniform in [0, 1).
    double next_unit() { return unit_double(next_u64()); }

    /// Uniform in (0, 1]; safe to feed into log().
    double next_unit_open() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller. The second variate of each pair is
    /// cached, so a stream of gaussians consumes one uniform per variate on
    /// average and stays deterministic.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_unit_open();
        double u2 = next_unit();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(next_unit() * static_cast<double>(n)) % n;
    }

    CounterRng substream(std::uint64_t index) const {
        return CounterRng(substream_key(key_, index));
    }

    std::uint64_t key() const { return key_; }

   private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace sht
