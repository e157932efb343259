#include "qbell/rng.hpp"

namespace qbell::rng {

namespace {

constexpr uint32_t kMult0 = 0xD2511F53u;
constexpr uint32_t kMult1 = 0xCD9E8D57u;
constexpr uint32_t kWeyl0 = 0x9E3779B9u;
constexpr uint32_t kWeyl1 = 0xBB67AE85u;

inline std::array<uint32_t, 4> round_once(const std::array<uint32_t, 4>& c,
                                          const std::array<uint32_t, 2>& k) {
    const uint64_t p0 = static_cast<uint64_t>(kMult0) * c[0];
    const uint64_t p1 = static_cast<uint64_t>(kMult1) * c[2];
    return {static_cast<uint32_t>(p1 >> 32) ^ c[1] ^ k[0], static_cast<uint32_t>(p1),
            static_cast<uint32_t>(p0 >> 32) ^ c[3] ^ k[1], static_cast<uint32_t>(p0)};
}

} // namespace

std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key) {
    counter = round_once(counter, key);
    for (int i = 1; i < 10; ++i) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
        counter = round_once(counter, key);
    }
    return counter;
}

} // namespace qbell::rng
