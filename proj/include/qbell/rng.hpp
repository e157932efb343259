#pragma once

#include <array>
#include <cstdint>

namespace qbell::rng {

/// Philox 4x32-10 counter-based generator. Stateless: every 128-bit block is
/// a pure function of (counter, key), so streams can be split across threads
/// or SIMD lanes and replayed exactly.
std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key);

/// Block keyed on a 64-bit seed, indexed by (index, stream).
inline std::array<uint32_t, 4> philox_block(uint64_t seed, uint64_t index, uint64_t stream = 0) {
    return philox4x32({static_cast<uint32_t>(index), static_cast<uint32_t>(index >> 32),
                       static_cast<uint32_t>(stream), static_cast<uint32_t>(stream >> 32)},
                      {static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)});
}

/// Uniform double in [0, 1) from the top 52 bits of a 64-bit word.
inline double uniform01(uint64_t bits) {
    return static_cast<double>(bits >> 12) * 0x1.0p-52;
}

/// Sequential convenience stream over philox blocks. Used by tests and the
/// randomized audit modes; simulation kernels consume blocks directly.
class CounterRng {
public:
    explicit CounterRng(uint64_t seed, uint64_t stream = 0)
        : seed_(seed), stream_(stream), index_(0), word_(4) {}

    uint32_t next_u32() {
        if (word_ == 4) {
            block_ = philox_block(seed_, index_++, stream_);
            word_ = 0;
        }
        return block_[word_++];
    }

    uint64_t next_u64() {
        const uint64_t lo = next_u32();
        const uint64_t hi = next_u32();
        return (hi << 32) | lo;
    }

    /// Uniform in [0, 1).
    double next_double() { return uniform01(next_u64()); }

    /// Uniform over {0, ..., n-1} by 64-bit multiply-shift.
    uint32_t next_below(uint32_t n) {
        return static_cast<uint32_t>((static_cast<uint64_t>(next_u32()) * n) >> 32);
    }

private:
    uint64_t seed_, stream_, index_;
    std::array<uint32_t, 4> block_{};
    int word_;
};

} // namespace qbell::rng
