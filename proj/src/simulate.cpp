#include "qbell/simulate.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace qbell {

double LhvEstimate::c(int ka, int kb) const {
    const size_t p = static_cast<size_t>(2 * ka + kb);
    const uint64_t n = counts.trials[p];
    if (n == 0) {
        return 0.0;
    }
    return (2.0 * static_cast<double>(counts.plus[p]) - static_cast<double>(n)) /
           static_cast<double>(n);
}

double LhvEstimate::se(int ka, int kb) const {
    const size_t p = static_cast<size_t>(2 * ka + kb);
    const uint64_t n = counts.trials[p];
    if (n == 0) {
        return std::numeric_limits<double>::infinity();
    }
    const double est = c(ka, kb);
    return std::sqrt(std::max(0.0, 1.0 - est * est) / static_cast<double>(n));
}

double LhvEstimate::chsh_se() const {
    double var = 0.0;
    for (int ka = 0; ka < 2; ++ka) {
        for (int kb = 0; kb < 2; ++kb) {
            const double s = se(ka, kb);
            var += s * s;
        }
    }
    return std::sqrt(var);
}

LhvEstimate simulate_lhv(const LhvStrategy& strategy, uint64_t trials, uint64_t seed, int threads,
                         kernels::Backend backend) {
    if (trials == 0) {
        throw std::invalid_argument("simulate_lhv: trials must be >= 1");
    }
    const auto cdf = strategy.cdf();
    const auto bits = LhvStrategy::product_bits();
    const kernels::Backend resolved = kernels::resolve(backend);

    unsigned n_threads = threads > 0 ? static_cast<unsigned>(threads)
                                     : std::max(1u, std::thread::hardware_concurrency());
    constexpr uint64_t kTile = 1u << 16;
    const uint64_t n_tiles = (trials + kTile - 1) / kTile;
    if (n_tiles < n_threads) {
        n_threads = static_cast<unsigned>(n_tiles);
    }

    kernels::TrialCounts total;
    if (n_threads <= 1) {
        total = kernels::lhv_accumulate(cdf, bits, seed, 0, trials, resolved);
    } else {
        std::atomic<uint64_t> next_tile{0};
        std::mutex merge_mutex;
        std::vector<std::thread> workers;
        workers.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) {
            workers.emplace_back([&] {
                kernels::TrialCounts local;
                for (;;) {
                    const uint64_t tile = next_tile.fetch_add(1);
                    if (tile >= n_tiles) {
                        break;
                    }
                    const uint64_t begin = tile * kTile;
                    const uint64_t end = std::min(trials, begin + kTile);
                    local.add(kernels::lhv_accumulate(cdf, bits, seed, begin, end, resolved));
                }
                const std::lock_guard<std::mutex> lock(merge_mutex);
                total.add(local);
            });
        }
        for (auto& w : workers) {
            w.join();
        }
    }
    return LhvEstimate{total};
}

} // namespace qbell
