#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qbell/pauli.hpp"

namespace qbell {

/// Deterministic outcome assignment for both settings of both stations:
/// a1, a2 are the station-A outcomes for knob positions 1 and 2, b1, b2 the
/// station-B outcomes.
struct ClassicalAssignment {
    Spin a1, a2, b1, b2;

    int index() const {
        return ((a1 == Spin::down) << 3) | ((a2 == Spin::down) << 2) |
               ((b1 == Spin::down) << 1) | (b2 == Spin::down);
    }

    static ClassicalAssignment from_index(int idx) {
        return {spin_from_sign((idx & 8) ? -1 : 1), spin_from_sign((idx & 4) ? -1 : 1),
                spin_from_sign((idx & 2) ? -1 : 1), spin_from_sign((idx & 1) ? -1 : 1)};
    }

    std::string str() const;
};

/// Per-event combination a1 b1 + a1 b2 + a2 b1 - a2 b2; always +-2.
int gamma(const ClassicalAssignment& x);

/// The regrouped form a1 (b1 + b2) + a2 (b1 - b2); identical to gamma on
/// every assignment (one bracket is always zero).
int gamma_grouped(const ClassicalAssignment& x);

/// All sixteen assignments with their gamma values; eight are +2 and eight
/// are -2.
std::vector<std::pair<ClassicalAssignment, int>> enumerate_assignments();

/// Occurrence counts of gamma = +2 and gamma = -2 over a run. Counts are
/// signed on purpose: negative counts model signed measures and break the
/// CHSH bound.
struct FrequencyVector {
    long long n_plus2 = 0;
    long long n_minus2 = 0;

    long long total() const { return n_plus2 + n_minus2; }
};

/// 2 (n1 - n2) / N. Bounded by 2 in magnitude only when both counts are
/// nonnegative.
double chsh_from_frequencies(const FrequencyVector& f);

/// Probability distribution over the sixteen deterministic assignments: a
/// legitimate local hidden-variable strategy. Weights must be nonnegative
/// and normalized; signed demonstrations use FrequencyVector instead.
class LhvStrategy {
public:
    static LhvStrategy uniform();
    static LhvStrategy point_mass(const ClassicalAssignment& x);
    static LhvStrategy from_weights(const std::array<double, 16>& w);

    double weight(int index) const { return w_[static_cast<size_t>(index)]; }
    const std::array<double, 16>& weights() const { return w_; }

    /// Cumulative distribution with the final entry pinned to exactly 1.
    std::array<double, 16> cdf() const;

    /// For each assignment, bit 2*ka+kb set when the product of the
    /// station-A outcome at knob ka and station-B outcome at knob kb is +1.
    static std::array<uint8_t, 16> product_bits();

private:
    explicit LhvStrategy(const std::array<double, 16>& w) : w_(w) {}
    std::array<double, 16> w_;
};

struct Correlations {
    double c11, c12, c21, c22;

    double chsh() const { return c11 + c12 + c21 - c22; }
};

/// Exact expectation of each outcome product under the strategy, by
/// enumeration over the sixteen-point support.
Correlations correlations_from_strategy(const LhvStrategy& s);

/// Emission counts per Table-style population row: row k holds the count of
/// pairs whose first particle carries the k-th sign pattern along axes
/// (a, b, c), the second particle the opposite pattern. Counts are signed
/// for the same reason as FrequencyVector.
struct BellPopulations {
    std::array<long long, 8> counts{};

    long long total() const;
};

/// Sign patterns (a, b, c) of particle 1 for the eight population rows.
std::array<std::array<int, 3>, 8> population_sign_patterns();

struct BellPairwiseReport {
    double p_ab; // P(a+, b+)
    double p_ac; // P(a+, c+)
    double p_cb; // P(c+, b+)
    bool triangle_holds;
};

/// Pairwise detection probabilities from the populations, counted directly
/// from the row semantics (particle 2 carries the opposite signs), plus the
/// triangle inequality P(a+,b+) <= P(a+,c+) + P(c+,b+). Holds whenever all
/// counts are nonnegative; signed counts can break it.
BellPairwiseReport bell_pairwise_from_populations(const BellPopulations& p);

} // namespace qbell
