#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace qbell::kernels {

/// Which implementation of the data-parallel inner loops to run. scalar is
/// the reference; avx2 must produce bit-identical results and is selected by
/// auto_detect when the CPU supports it.
enum class Backend { auto_detect, scalar, avx2 };

bool avx2_supported();

/// auto_detect -> concrete backend for this machine.
Backend resolve(Backend b);

/// Outcome counters for the four knob-setting pairs (index 2*ka + kb).
struct TrialCounts {
    std::array<uint64_t, 4> trials{};
    std::array<uint64_t, 4> plus{}; // trials whose outcome product was +1

    void add(const TrialCounts& o) {
        for (std::size_t i = 0; i < 4; ++i) {
            trials[i] += o.trials[i];
            plus[i] += o.plus[i];
        }
    }
};

/// Hidden-variable trial loop over counter indices [begin, end).
///
/// Per trial i, one philox block keyed on (seed, i) supplies the assignment
/// draw (top 52 bits of words 0..1 -> uniform in [0,1), inverted through
/// cdf16) and the two independent knob choices (low bit of words 2 and 3).
/// product_bits[assignment] holds, in bit position 2*ka+kb, whether the
/// alpha_ka * beta_kb product is +1.
///
/// cdf16 must be nondecreasing with cdf16[15] == 1.0 exactly. Counts are a
/// pure function of (seed, begin, end), identical for every backend and any
/// partition of the index range.
TrialCounts lhv_accumulate(const std::array<double, 16>& cdf16,
                           const std::array<uint8_t, 16>& product_bits, uint64_t seed,
                           uint64_t begin, uint64_t end, Backend backend = Backend::auto_detect);

/// Sixteen-entry joint-probability table from the six pairwise dot products
/// (order: a1.a2, a1.b1, a1.b2, a2.b1, a2.b2, b1.b2) and the quartic
/// invariant. Entry order: sign quadruples indexed with a1 the high bit and
/// b2 the low bit, 0 = up. Backends agree bitwise.
void table16(const std::array<double, 6>& dots, double delta, std::array<double, 16>& out,
             Backend backend = Backend::auto_detect);

/// Sign pattern of table16: for entry e and term k (the six dots then delta),
/// the +-1 factor multiplying that term.
double table16_sign(int entry, int term);

namespace detail {

constexpr std::array<std::array<double, 7>, 16> make_sign_table() {
    std::array<std::array<double, 7>, 16> t{};
    for (int e = 0; e < 16; ++e) {
        // bit 3 = a1, bit 2 = a2, bit 1 = b1, bit 0 = b2; set bit = down.
        const double s1 = (e & 8) ? -1.0 : 1.0;
        const double s2 = (e & 4) ? -1.0 : 1.0;
        const double s3 = (e & 2) ? -1.0 : 1.0;
        const double s4 = (e & 1) ? -1.0 : 1.0;
        t[static_cast<std::size_t>(e)] = {s1 * s2, s1 * s3, s1 * s4, s2 * s3,
                                          s2 * s4, s3 * s4, s1 * s2 * s3 * s4};
    }
    return t;
}

inline constexpr std::array<std::array<double, 7>, 16> kTable16Signs = make_sign_table();

TrialCounts lhv_accumulate_scalar(const std::array<double, 16>& cdf16,
                                  const std::array<uint8_t, 16>& product_bits, uint64_t seed,
                                  uint64_t begin, uint64_t end);
TrialCounts lhv_accumulate_avx2(const std::array<double, 16>& cdf16,
                                const std::array<uint8_t, 16>& product_bits, uint64_t seed,
                                uint64_t begin, uint64_t end);
void table16_scalar(const std::array<double, 6>& dots, double delta, std::array<double, 16>& out);
void table16_avx2(const std::array<double, 6>& dots, double delta, std::array<double, 16>& out);
void philox8_avx2(uint64_t seed, uint64_t base_index, uint32_t* out32x32);
} // namespace detail

} // namespace qbell::kernels
