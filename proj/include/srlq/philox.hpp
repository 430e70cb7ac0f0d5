#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace srlq {

// Philox4x32-10 counter-based generator. A (key, counter) pair maps to four
// independent 32-bit words, so random streams are pure functions of
// (seed, sample index) and results do not depend on evaluation order.
struct Philox4x32 {
    static constexpr uint32_t kMul0 = 0xD2511F53u;
    static constexpr uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr uint32_t kWeyl1 = 0xBB67AE85u;

    static std::array<uint32_t, 4> block(std::array<uint32_t, 4> counter,
                                         std::array<uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const uint64_t p0 = static_cast<uint64_t>(kMul0) * counter[0];
            const uint64_t p1 = static_cast<uint64_t>(kMul1) * counter[2];
            const uint32_t hi0 = static_cast<uint32_t>(p0 >> 32);
            const uint32_t lo0 = static_cast<uint32_t>(p0);
            const uint32_t hi1 = static_cast<uint32_t>(p1 >> 32);
            const uint32_t lo1 = static_cast<uint32_t>(p1);
            counter = {hi1 ^ counter[1] ^ key[0], lo1, hi0 ^ counter[3] ^ key[1], lo0};
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        return counter;
    }

    static std::array<uint32_t, 4> block(uint64_t seed, uint64_t index) {
        return block({static_cast<uint32_t>(index), static_cast<uint32_t>(index >> 32), 0u, 0u},
                     {static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)});
    }
};

// 53-bit uniform in (0, 1] built from two 32-bit words.
inline double uniform_open_closed(uint32_t hi, uint32_t lo) {
    const uint64_t bits = (static_cast<uint64_t>(hi >> 6) << 27) | (lo >> 5);
    return static_cast<double>(bits + 1) * 0x1.0p-53;
}

// 53-bit uniform in [0, 1).
inline double uniform_closed_open(uint32_t hi, uint32_t lo) {
    const uint64_t bits = (static_cast<uint64_t>(hi >> 6) << 27) | (lo >> 5);
    return static_cast<double>(bits) * 0x1.0p-53;
}

// Standard normal draw for sample `index` of stream `seed` (Box-Muller).
inline double standard_normal(uint64_t seed, uint64_t index) {
    const auto words = Philox4x32::block(seed, index);
    const double u1 = uniform_open_closed(words[0], words[1]);
    const double u2 = uniform_closed_open(words[2], words[3]);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace srlq
