#include "gss/random.hpp"

#include <limits>

namespace gss {

RandomSource RandomSource::from_seed(const std::array<std::uint8_t, 32>& seed) {
    std::array<std::uint32_t, 8> words{};
    for (std::size_t w = 0; w < 8; ++w) {
        for (std::size_t b = 0; b < 4; ++b) {
            words[w] |= static_cast<std::uint32_t>(seed[w * 4 + b]) << (8 * b);
        }
    }
    std::seed_seq seq(words.begin(), words.end());
    return RandomSource(std::mt19937_64(seq));
}

RandomSource RandomSource::from_seed(std::uint64_t seed) {
    std::array<std::uint8_t, 32> bytes{};
    for (std::size_t b = 0; b < 8; ++b) {
        bytes[b] = static_cast<std::uint8_t>(seed >> (8 * b));
    }
    return RandomSource::from_seed(bytes);
}

RandomSource RandomSource::system() {
    std::random_device rd;
    std::array<std::uint8_t, 32> bytes{};
    for (std::size_t w = 0; w < 8; ++w) {
        std::uint32_t r = rd();
        for (std::size_t b = 0; b < 4; ++b) {
            bytes[w * 4 + b] = static_cast<std::uint8_t>(r >> (8 * b));
        }
    }
    return RandomSource::from_seed(bytes);
}

std::uint64_t RandomSource::next_u64() {
    return engine_();
}

std::uint64_t RandomSource::uniform_below(std::uint64_t bound) {
    if (bound == 0) {
        bound = 1;
    }
    if (bound == 1) {
        return 0;
    }
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return r % bound;
}

RandomSource RandomSource::derive_child() {
    std::array<std::uint8_t, 32> bytes{};
    for (std::size_t w = 0; w < 4; ++w) {
        std::uint64_t r = engine_();
        for (std::size_t b = 0; b < 8; ++b) {
            bytes[w * 8 + b] = static_cast<std::uint8_t>(r >> (8 * b));
        }
    }
    return RandomSource::from_seed(bytes);
}

} // namespace gss
