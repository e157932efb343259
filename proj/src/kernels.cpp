#include "qbell/kernels.hpp"

#include <stdexcept>

namespace qbell::kernels {

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend resolve(Backend b) {
    switch (b) {
    case Backend::auto_detect: return avx2_supported() ? Backend::avx2 : Backend::scalar;
    case Backend::avx2:
        if (!avx2_supported()) {
            throw std::invalid_argument("avx2 backend requested but not supported by this CPU");
        }
        return b;
    default: return b;
    }
}

TrialCounts lhv_accumulate(const std::array<double, 16>& cdf16,
                           const std::array<uint8_t, 16>& product_bits, uint64_t seed,
                           uint64_t begin, uint64_t end, Backend backend) {
    if (resolve(backend) == Backend::avx2) {
        return detail::lhv_accumulate_avx2(cdf16, product_bits, seed, begin, end);
    }
    return detail::lhv_accumulate_scalar(cdf16, product_bits, seed, begin, end);
}

void table16(const std::array<double, 6>& dots, double delta, std::array<double, 16>& out,
             Backend backend) {
    if (resolve(backend) == Backend::avx2) {
        detail::table16_avx2(dots, delta, out);
    } else {
        detail::table16_scalar(dots, delta, out);
    }
}

double table16_sign(int entry, int term) {
    return detail::kTable16Signs[static_cast<size_t>(entry)][static_cast<size_t>(term)];
}

} // namespace qbell::kernels
