#include "qbell/kernels.hpp"
#include "qbell/rng.hpp"

namespace qbell::kernels::detail {

TrialCounts lhv_accumulate_scalar(const std::array<double, 16>& cdf16,
                                  const std::array<uint8_t, 16>& product_bits, uint64_t seed,
                                  uint64_t begin, uint64_t end) {
    TrialCounts counts;
    for (uint64_t i = begin; i < end; ++i) {
        const auto block = rng::philox_block(seed, i);
        const uint64_t bits = (static_cast<uint64_t>(block[1]) << 32) | block[0];
        const double u = rng::uniform01(bits);
        // CDF inversion as a branchless count; cdf16[15] == 1.0 > u keeps
        // the index in range, and ties resolve identically on all backends.
        int idx = 0;
        for (int k = 0; k < 16; ++k) {
            idx += (u >= cdf16[static_cast<size_t>(k)]) ? 1 : 0;
        }
        const int pair = static_cast<int>(((block[2] & 1u) << 1) | (block[3] & 1u));
        counts.trials[static_cast<size_t>(pair)] += 1;
        counts.plus[static_cast<size_t>(pair)] +=
            (product_bits[static_cast<size_t>(idx)] >> pair) & 1u;
    }
    return counts;
}

void table16_scalar(const std::array<double, 6>& dots, double delta, std::array<double, 16>& out) {
    for (int e = 0; e < 16; ++e) {
        const auto& s = kTable16Signs[static_cast<size_t>(e)];
        double t = 1.0;
        t += s[0] * dots[0];
        t += s[1] * dots[1];
        t += s[2] * dots[2];
        t += s[3] * dots[3];
        t += s[4] * dots[4];
        t += s[5] * dots[5];
        t += s[6] * delta;
        out[static_cast<size_t>(e)] = t * 0.0625;
    }
}

} // namespace qbell::kernels::detail
