// AVX2 variants of the inner loops. Compiled with -mavx2 on x86 and only
// reached through the runtime dispatcher; every result is bit-identical to
// the scalar reference (integer philox rounds, exact double conversion, no
// FMA contraction).

#include "qbell/kernels.hpp"
#include "qbell/rng.hpp"

#include <stdexcept>

#if defined(__AVX2__)

#include <immintrin.h>

namespace qbell::kernels::detail {

namespace {

constexpr uint32_t kMult0 = 0xD2511F53u;
constexpr uint32_t kMult1 = 0xCD9E8D57u;
constexpr uint32_t kWeyl0 = 0x9E3779B9u;
constexpr uint32_t kWeyl1 = 0xBB67AE85u;

// (hi, lo) 32x32->64 products of all eight 32-bit lanes.
inline void mulhilo8(__m256i x, uint32_t mult, __m256i& hi, __m256i& lo) {
    const __m256i m = _mm256_set1_epi32(static_cast<int>(mult));
    const __m256i even = _mm256_mul_epu32(x, m);
    const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), m);
    lo = _mm256_blend_epi32(even, _mm256_slli_epi64(odd, 32), 0xAA);
    hi = _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0xAA);
}

struct Philox8State {
    __m256i x0, x1, x2, x3;

    void round(uint32_t k0, uint32_t k1) {
        __m256i hi0, lo0, hi1, lo1;
        mulhilo8(x0, kMult0, hi0, lo0);
        mulhilo8(x2, kMult1, hi1, lo1);
        const __m256i key0 = _mm256_set1_epi32(static_cast<int>(k0));
        const __m256i key1 = _mm256_set1_epi32(static_cast<int>(k1));
        x0 = _mm256_xor_si256(_mm256_xor_si256(hi1, x1), key0);
        x1 = lo1;
        x2 = _mm256_xor_si256(_mm256_xor_si256(hi0, x3), key1);
        x3 = lo0;
    }
};

inline Philox8State philox8(uint64_t seed, uint64_t base_index) {
    alignas(32) uint32_t lo[8];
    alignas(32) uint32_t hi[8];
    for (uint64_t lane = 0; lane < 8; ++lane) {
        const uint64_t idx = base_index + lane;
        lo[lane] = static_cast<uint32_t>(idx);
        hi[lane] = static_cast<uint32_t>(idx >> 32);
    }
    Philox8State s;
    s.x0 = _mm256_load_si256(reinterpret_cast<const __m256i*>(lo));
    s.x1 = _mm256_load_si256(reinterpret_cast<const __m256i*>(hi));
    s.x2 = _mm256_setzero_si256();
    s.x3 = _mm256_setzero_si256();
    uint32_t k0 = static_cast<uint32_t>(seed);
    uint32_t k1 = static_cast<uint32_t>(seed >> 32);
    s.round(k0, k1);
    for (int r = 1; r < 10; ++r) {
        k0 += kWeyl0;
        k1 += kWeyl1;
        s.round(k0, k1);
    }
    return s;
}

} // namespace

void philox8_avx2(uint64_t seed, uint64_t base_index, uint32_t* out32x32) {
    const Philox8State s = philox8(seed, base_index);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out32x32 + 0), s.x0);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out32x32 + 8), s.x1);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out32x32 + 16), s.x2);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out32x32 + 24), s.x3);
}

TrialCounts lhv_accumulate_avx2(const std::array<double, 16>& cdf16,
                                const std::array<uint8_t, 16>& product_bits, uint64_t seed,
                                uint64_t begin, uint64_t end) {
    TrialCounts counts;
    uint64_t i = begin;
    alignas(32) uint32_t w0[8];
    alignas(32) uint32_t w1[8];
    alignas(32) uint32_t w2[8];
    alignas(32) uint32_t w3[8];
    alignas(32) double u[8];
    alignas(32) uint64_t idx[8];
    for (; i + 8 <= end; i += 8) {
        const Philox8State s = philox8(seed, i);
        _mm256_store_si256(reinterpret_cast<__m256i*>(w0), s.x0);
        _mm256_store_si256(reinterpret_cast<__m256i*>(w1), s.x1);
        _mm256_store_si256(reinterpret_cast<__m256i*>(w2), s.x2);
        _mm256_store_si256(reinterpret_cast<__m256i*>(w3), s.x3);
        for (int lane = 0; lane < 8; ++lane) {
            const uint64_t bits = (static_cast<uint64_t>(w1[lane]) << 32) | w0[lane];
            u[lane] = rng::uniform01(bits);
        }
        // Branchless CDF inversion across lanes: a true compare is the
        // integer -1, so subtracting masks counts thresholds passed.
        const __m256d ua = _mm256_load_pd(u);
        const __m256d ub = _mm256_load_pd(u + 4);
        __m256i na = _mm256_setzero_si256();
        __m256i nb = _mm256_setzero_si256();
        for (int k = 0; k < 16; ++k) {
            const __m256d c = _mm256_set1_pd(cdf16[static_cast<size_t>(k)]);
            na = _mm256_sub_epi64(na, _mm256_castpd_si256(_mm256_cmp_pd(ua, c, _CMP_GE_OQ)));
            nb = _mm256_sub_epi64(nb, _mm256_castpd_si256(_mm256_cmp_pd(ub, c, _CMP_GE_OQ)));
        }
        _mm256_store_si256(reinterpret_cast<__m256i*>(idx), na);
        _mm256_store_si256(reinterpret_cast<__m256i*>(idx + 4), nb);
        for (int lane = 0; lane < 8; ++lane) {
            const int pair = static_cast<int>(((w2[lane] & 1u) << 1) | (w3[lane] & 1u));
            counts.trials[static_cast<size_t>(pair)] += 1;
            counts.plus[static_cast<size_t>(pair)] +=
                (product_bits[idx[lane]] >> pair) & 1u;
        }
    }
    if (i < end) {
        counts.add(lhv_accumulate_scalar(cdf16, product_bits, seed, i, end));
    }
    return counts;
}

void table16_avx2(const std::array<double, 6>& dots, double delta, std::array<double, 16>& out) {
    // Same accumulation order as the scalar reference, four entries per
    // vector; lanes are independent so the doubles match bitwise.
    alignas(32) double signs[7][16];
    for (int e = 0; e < 16; ++e) {
        for (int k = 0; k < 7; ++k) {
            signs[k][e] = kTable16Signs[static_cast<size_t>(e)][static_cast<size_t>(k)];
        }
    }
    const double terms[7] = {dots[0], dots[1], dots[2], dots[3], dots[4], dots[5], delta};
    for (int base = 0; base < 16; base += 4) {
        __m256d t = _mm256_set1_pd(1.0);
        for (int k = 0; k < 7; ++k) {
            const __m256d sk = _mm256_load_pd(&signs[k][base]);
            t = _mm256_add_pd(t, _mm256_mul_pd(sk, _mm256_set1_pd(terms[k])));
        }
        t = _mm256_mul_pd(t, _mm256_set1_pd(0.0625));
        _mm256_storeu_pd(&out[static_cast<size_t>(base)], t);
    }
}

} // namespace qbell::kernels::detail

#else // !defined(__AVX2__)

namespace qbell::kernels::detail {

TrialCounts lhv_accumulate_avx2(const std::array<double, 16>&, const std::array<uint8_t, 16>&,
                                uint64_t, uint64_t, uint64_t) {
    throw std::runtime_error("avx2 kernels not compiled in");
}

void table16_avx2(const std::array<double, 6>&, double, std::array<double, 16>&) {
    throw std::runtime_error("avx2 kernels not compiled in");
}

void philox8_avx2(uint64_t, uint64_t, uint32_t*) {
    throw std::runtime_error("avx2 kernels not compiled in");
}

} // namespace qbell::kernels::detail

#endif
