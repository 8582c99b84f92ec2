// Copyright 2026 The qdens authors.
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
#include <limits>
#include <string_view>
#include <vector>

namespace qdens {

/// One step of the splitmix64 sequence. Advances `state` and returns the
/// next output word. Self-contained so that every platform and standard
/// library produces the same stream.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Small deterministic PRNG used for every stochastic choice in the
/// toolkit. std::random distributions are implementation-defined, so all
/// sampling primitives are spelled out here.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        // Warm up so that small seeds do not produce correlated streams.
        (void)splitmix64_next(state_);
        (void)splitmix64_next(state_);
    }

    std::uint64_t next_u64() { return splitmix64_next(state_); }

    /// Uniform integer in [lo, hi], inclusive. Rejection sampling keeps the
    /// result exactly uniform.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1ULL;
        if (span == 0) return lo + static_cast<std::int64_t>(next_u64());  // full range
        const std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() -
            std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t r = next_u64();
        while (r >= limit) r = next_u64();
        return lo + static_cast<std::int64_t>(r % span);
    }

    /// Uniform index in [0, n). Requires n > 0.
    std::size_t pick_index(std::size_t n) {
        return static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(n) - 1));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool coin() { return (next_u64() & 1ULL) != 0ULL; }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = pick_index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    std::uint64_t state_;
};

/// Derives an independent child seed from a base seed and a structured key.
/// The same key always yields the same child, and distinct keys yield
/// decorrelated streams; sweep replay depends on this being a pure function.
inline std::uint64_t child_seed(std::uint64_t base_seed, std::string_view purpose,
                                std::string_view tag, std::uint64_t size,
                                std::uint64_t density_mill, std::uint64_t run_index) {
    auto fold_word = [](std::uint64_t& state, std::uint64_t word) {
        state ^= word;
        (void)splitmix64_next(state);
    };
    auto fold_string = [&](std::uint64_t& state, std::string_view s) {
        std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a, widened per character
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
        fold_word(state, h);
    };
    std::uint64_t state = base_seed;
    (void)splitmix64_next(state);
    fold_string(state, purpose);
    fold_string(state, tag);
    fold_word(state, size);
    fold_word(state, density_mill);
    fold_word(state, run_index);
    return splitmix64_next(state);
}

}  // namespace qdens
