#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "qbell/rng.hpp"
#include "qbell/simulate.hpp"

using namespace qbell;

namespace {

LhvStrategy skewed_strategy() {
    std::array<double, 16> w{};
    w.fill(0.03125); // 16 x 1/32 = 0.5
    w[0] += 0.25;
    w[9] += 0.25;
    return LhvStrategy::from_weights(w);
}

} // namespace

TEST_CASE("point-mass strategy estimates every correlation exactly") {
    const LhvStrategy point = LhvStrategy::point_mass(ClassicalAssignment::from_index(0));
    const LhvEstimate est = simulate_lhv(point, 4000, 7, 1);
    for (int ka = 0; ka < 2; ++ka) {
        for (int kb = 0; kb < 2; ++kb) {
            CHECK(est.c(ka, kb) == 1.0);
        }
    }
    CHECK(est.chsh() == doctest::Approx(2.0));
}

TEST_CASE("uniform strategy stays within four standard errors of zero") {
    const LhvEstimate est = simulate_lhv(LhvStrategy::uniform(), 1000000, 42);
    for (int ka = 0; ka < 2; ++ka) {
        for (int kb = 0; kb < 2; ++kb) {
            CHECK(std::abs(est.c(ka, kb)) <= 4.0 * est.se(ka, kb));
        }
    }
    CHECK(std::abs(est.chsh()) <= 2.0 + 5.0 * est.chsh_se());
}

TEST_CASE("aggregates are bit-identical across thread counts and backends") {
    const LhvStrategy s = skewed_strategy();
    const LhvEstimate t1 = simulate_lhv(s, 300000, 99, 1);
    const LhvEstimate t2 = simulate_lhv(s, 300000, 99, 2);
    const LhvEstimate t4 = simulate_lhv(s, 300000, 99, 4);
    CHECK(t1.counts.trials == t2.counts.trials);
    CHECK(t1.counts.plus == t2.counts.plus);
    CHECK(t1.counts.trials == t4.counts.trials);
    CHECK(t1.counts.plus == t4.counts.plus);

    const LhvEstimate scalar = simulate_lhv(s, 300000, 99, 2, kernels::Backend::scalar);
    CHECK(scalar.counts.trials == t1.counts.trials);
    CHECK(scalar.counts.plus == t1.counts.plus);
    if (kernels::avx2_supported()) {
        const LhvEstimate vec = simulate_lhv(s, 300000, 99, 2, kernels::Backend::avx2);
        CHECK(vec.counts.trials == t1.counts.trials);
        CHECK(vec.counts.plus == t1.counts.plus);
    }
}

TEST_CASE("estimates converge to the exact correlations at rate 1/sqrt(trials)") {
    const LhvStrategy s = skewed_strategy();
    const Correlations exact = correlations_from_strategy(s);
    const double exact_c[2][2] = {{exact.c11, exact.c12}, {exact.c21, exact.c22}};

    const std::vector<uint64_t> trial_counts = {1000, 10000, 100000, 1000000};
    std::vector<double> log_n;
    std::vector<double> log_err;
    constexpr int kSeeds = 64;
    for (const uint64_t trials : trial_counts) {
        double sq_sum = 0.0;
        int samples = 0;
        for (int seed = 0; seed < kSeeds; ++seed) {
            const LhvEstimate est = simulate_lhv(s, trials, 1000 + static_cast<uint64_t>(seed));
            for (int ka = 0; ka < 2; ++ka) {
                for (int kb = 0; kb < 2; ++kb) {
                    const double e = est.c(ka, kb) - exact_c[ka][kb];
                    sq_sum += e * e;
                    ++samples;
                }
            }
        }
        const double rms = std::sqrt(sq_sum / samples);
        log_n.push_back(std::log10(static_cast<double>(trials)));
        log_err.push_back(std::log10(rms));
    }

    // Least-squares slope of log(err) vs log(trials).
    const size_t n = log_n.size();
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < n; ++i) {
        mx += log_n[i];
        my += log_err[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (log_n[i] - mx) * (log_n[i] - mx);
        sxy += (log_n[i] - mx) * (log_err[i] - my);
    }
    const double slope = sxy / sxx;
    MESSAGE("convergence slope: " << slope);
    CHECK(slope > -0.6);
    CHECK(slope < -0.4);
}

TEST_CASE("simulate_lhv rejects zero trials") {
    CHECK_THROWS_AS(simulate_lhv(LhvStrategy::uniform(), 0, 1), std::invalid_argument);
}

TEST_CASE("standard errors shrink like 1/sqrt(n) and chsh_se combines them") {
    const LhvEstimate est = simulate_lhv(LhvStrategy::uniform(), 100000, 5);
    double var = 0.0;
    for (int ka = 0; ka < 2; ++ka) {
        for (int kb = 0; kb < 2; ++kb) {
            const double se = est.se(ka, kb);
            // ~ sqrt(1/n) for near-zero correlations on ~25k samples.
            CHECK(se == doctest::Approx(1.0 / std::sqrt(static_cast<double>(
                                                  est.pair_trials(ka, kb))))
                            .epsilon(0.01));
            var += se * se;
        }
    }
    CHECK(est.chsh_se() == doctest::Approx(std::sqrt(var)));
}
