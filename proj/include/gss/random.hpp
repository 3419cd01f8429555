#pragma once

#include <array>
#include <cstdint>
#include <random>

namespace gss {

/// Deterministic dealer randomness. Identical seeds yield identical streams;
/// nothing in the library reads entropy except through this interface. A
/// source is single-owner: one source per dealing, never shared across
/// concurrent callers.
class RandomSource {
public:
    static RandomSource from_seed(const std::array<std::uint8_t, 32>& seed);

    /// Convenience for CLIs and tests: expands a 64-bit seed into the
    /// 32-byte form (little-endian, zero padded).
    static RandomSource from_seed(std::uint64_t seed);

    static RandomSource system();

    RandomSource(const RandomSource&) = delete;
    RandomSource& operator=(const RandomSource&) = delete;
    RandomSource(RandomSource&&) = default;
    RandomSource& operator=(RandomSource&&) = default;

    std::uint64_t next_u64();

    /// Uniform value in [0, bound), bound >= 1. Rejection sampled, exact.
    std::uint64_t uniform_below(std::uint64_t bound);

    std::uint32_t uniform_digit(std::uint32_t radix) {
        return static_cast<std::uint32_t>(uniform_below(radix));
    }

    /// An independent child stream; used when one dealer run needs separately
    /// seeded sub-dealings.
    RandomSource derive_child();

private:
    explicit RandomSource(std::mt19937_64 engine) : engine_(engine) {}

    std::mt19937_64 engine_;
};

} // namespace gss
