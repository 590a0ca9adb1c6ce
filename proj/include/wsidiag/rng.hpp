#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "wsidiag/error.hpp"

namespace wsidiag {

// Seeded pseudorandom generation used everywhere randomness is needed.
// The generator is xoshiro256++ (Blackman & Vigna) seeded through the
// SplitMix64 finalizer, built entirely from 64-bit integer arithmetic so
// that a given seed reproduces the same value stream bit-for-bit on every
// platform. <random> engines are deliberately not used for sampling:
// the standard leaves distribution algorithms implementation-defined.

/// SplitMix64 step: advances *state by the golden-gamma increment and
/// returns the finalized output.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Derives the seed of an independent stream: stream i of master seed m is
/// the (i+1)-th SplitMix64 output of state m.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t state = master + stream * 0x9E3779B97F4A7C15ULL;
    return splitmix64_next(state);
}

class Rng {
public:
    /// Seeds the four xoshiro256++ state words with consecutive SplitMix64
    /// outputs of `seed`.
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64_next(sm);
    }

    /// Generator for substream `stream` of `seed`; used for per-iteration
    /// and per-scan seeding so work units stay schedule-independent.
    static Rng for_stream(std::uint64_t seed, std::uint64_t stream) {
        return Rng(derive_seed(seed, stream));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1): the top 53 bits scaled by 2^-53.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Unbiased uniform integer in [0, n) by rejection.
    std::uint64_t uniform_below(std::uint64_t n) {
        if (n == 0) throw ParamError("uniform_below: n must be positive");
        const std::uint64_t threshold = (0 - n) % n;
        std::uint64_t r = next_u64();
        while (r < threshold) r = next_u64();
        return r % n;
    }

    /// Draws `count` distinct indices from [0, n) by Floyd's algorithm,
    /// O(count) regardless of n. Order is the insertion order of the
    /// algorithm, deterministic for a given state.
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t count) {
        if (count > n) throw ParamError("sample_indices: sample larger than population");
        std::vector<std::size_t> picked;
        picked.reserve(count);
        for (std::size_t j = n - count; j < n; ++j) {
            const std::size_t t = static_cast<std::size_t>(uniform_below(j + 1));
            bool taken = false;
            for (std::size_t v : picked) {
                if (v == t) {
                    taken = true;
                    break;
                }
            }
            picked.push_back(taken ? j : t);
        }
        return picked;
    }

    /// Sample of `count` values drawn without replacement.
    std::vector<double> sample_without_replacement(std::span<const double> pop, std::size_t count) {
        std::vector<double> out;
        out.reserve(count);
        for (std::size_t idx : sample_indices(pop.size(), count)) out.push_back(pop[idx]);
        return out;
    }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::span<T> values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(uniform_below(i));
            std::swap(values[i - 1], values[j]);
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_;
};

}  // namespace wsidiag
