#pragma once

#include <cstdint>

#include "qbell/classical.hpp"
#include "qbell/kernels.hpp"

namespace qbell {

/// Monte-Carlo estimates of the four setting-pair correlations.
struct LhvEstimate {
    kernels::TrialCounts counts;

    uint64_t pair_trials(int ka, int kb) const {
        return counts.trials[static_cast<size_t>(2 * ka + kb)];
    }

    /// Estimated correlation for setting pair (ka, kb); 0 when unsampled.
    double c(int ka, int kb) const;

    /// Plug-in standard error sqrt((1 - c^2)/n) of the +-1 product mean.
    double se(int ka, int kb) const;

    double chsh() const { return c(0, 0) + c(0, 1) + c(1, 0) - c(1, 1); }

    /// Standard error of the CHSH combination (independent terms).
    double chsh_se() const;
};

/// Runs `trials` independent events: each samples an assignment from the
/// strategy and a uniform, independent knob setting per station, recording
/// the single observed product. Counter-based RNG keyed on (seed, trial)
/// makes the aggregate bit-identical for any thread count or backend.
///
/// threads = 0 picks the hardware concurrency.
LhvEstimate simulate_lhv(const LhvStrategy& strategy, uint64_t trials, uint64_t seed,
                         int threads = 0, kernels::Backend backend = kernels::Backend::auto_detect);

} // namespace qbell
