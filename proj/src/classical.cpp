#include "qbell/classical.hpp"

#include <cmath>
#include <stdexcept>

namespace qbell {

std::string ClassicalAssignment::str() const {
    std::string out;
    out += (a1 == Spin::up) ? '+' : '-';
    out += (a2 == Spin::up) ? '+' : '-';
    out += (b1 == Spin::up) ? '+' : '-';
    out += (b2 == Spin::up) ? '+' : '-';
    return out;
}

int gamma(const ClassicalAssignment& x) {
    const int a1 = sign_of(x.a1);
    const int a2 = sign_of(x.a2);
    const int b1 = sign_of(x.b1);
    const int b2 = sign_of(x.b2);
    return a1 * b1 + a1 * b2 + a2 * b1 - a2 * b2;
}

int gamma_grouped(const ClassicalAssignment& x) {
    const int a1 = sign_of(x.a1);
    const int a2 = sign_of(x.a2);
    const int b1 = sign_of(x.b1);
    const int b2 = sign_of(x.b2);
    return a1 * (b1 + b2) + a2 * (b1 - b2);
}

std::vector<std::pair<ClassicalAssignment, int>> enumerate_assignments() {
    std::vector<std::pair<ClassicalAssignment, int>> out;
    out.reserve(16);
    for (int idx = 0; idx < 16; ++idx) {
        const ClassicalAssignment x = ClassicalAssignment::from_index(idx);
        out.emplace_back(x, gamma(x));
    }
    return out;
}

double chsh_from_frequencies(const FrequencyVector& f) {
    const long long n = f.total();
    if (n <= 0) {
        throw std::invalid_argument("chsh_from_frequencies: total count must be positive");
    }
    return 2.0 * static_cast<double>(f.n_plus2 - f.n_minus2) / static_cast<double>(n);
}

LhvStrategy LhvStrategy::uniform() {
    std::array<double, 16> w{};
    w.fill(1.0 / 16.0);
    return LhvStrategy(w);
}

LhvStrategy LhvStrategy::point_mass(const ClassicalAssignment& x) {
    std::array<double, 16> w{};
    w[static_cast<size_t>(x.index())] = 1.0;
    return LhvStrategy(w);
}

LhvStrategy LhvStrategy::from_weights(const std::array<double, 16>& w) {
    double total = 0.0;
    for (double v : w) {
        if (!std::isfinite(v) || v < 0.0) {
            throw std::invalid_argument("LhvStrategy: weights must be finite and nonnegative");
        }
        total += v;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("LhvStrategy: weights must sum to one");
    }
    return LhvStrategy(w);
}

std::array<double, 16> LhvStrategy::cdf() const {
    std::array<double, 16> c{};
    double acc = 0.0;
    for (size_t i = 0; i < 16; ++i) {
        acc += w_[i];
        c[i] = acc;
    }
    c[15] = 1.0;
    return c;
}

std::array<uint8_t, 16> LhvStrategy::product_bits() {
    std::array<uint8_t, 16> bits{};
    for (int idx = 0; idx < 16; ++idx) {
        const ClassicalAssignment x = ClassicalAssignment::from_index(idx);
        const int a[2] = {sign_of(x.a1), sign_of(x.a2)};
        const int b[2] = {sign_of(x.b1), sign_of(x.b2)};
        uint8_t v = 0;
        for (int ka = 0; ka < 2; ++ka) {
            for (int kb = 0; kb < 2; ++kb) {
                if (a[ka] * b[kb] > 0) {
                    v |= static_cast<uint8_t>(1u << (2 * ka + kb));
                }
            }
        }
        bits[static_cast<size_t>(idx)] = v;
    }
    return bits;
}

Correlations correlations_from_strategy(const LhvStrategy& s) {
    Correlations c{0.0, 0.0, 0.0, 0.0};
    for (int idx = 0; idx < 16; ++idx) {
        const ClassicalAssignment x = ClassicalAssignment::from_index(idx);
        const double w = s.weight(idx);
        c.c11 += w * sign_of(x.a1) * sign_of(x.b1);
        c.c12 += w * sign_of(x.a1) * sign_of(x.b2);
        c.c21 += w * sign_of(x.a2) * sign_of(x.b1);
        c.c22 += w * sign_of(x.a2) * sign_of(x.b2);
    }
    return c;
}

long long BellPopulations::total() const {
    long long n = 0;
    for (long long v : counts) {
        n += v;
    }
    return n;
}

std::array<std::array<int, 3>, 8> population_sign_patterns() {
    return {{{+1, +1, +1},
             {+1, +1, -1},
             {+1, -1, +1},
             {-1, +1, +1},
             {+1, -1, -1},
             {-1, +1, -1},
             {-1, -1, +1},
             {-1, -1, -1}}};
}

BellPairwiseReport bell_pairwise_from_populations(const BellPopulations& p) {
    const long long n = p.total();
    if (n <= 0) {
        throw std::invalid_argument("bell_pairwise_from_populations: total must be positive");
    }
    const auto patterns = population_sign_patterns();
    // P(x+, y+) counts rows where particle 1 is + along axis x and particle
    // 2 is + along axis y, i.e. particle 1 is - along y.
    const auto pair_p = [&](int axis_x, int axis_y) {
        long long count = 0;
        for (size_t row = 0; row < 8; ++row) {
            if (patterns[row][static_cast<size_t>(axis_x)] > 0 &&
                patterns[row][static_cast<size_t>(axis_y)] < 0) {
                count += p.counts[row];
            }
        }
        return static_cast<double>(count) / static_cast<double>(n);
    };
    BellPairwiseReport r{};
    r.p_ab = pair_p(0, 1);
    r.p_ac = pair_p(0, 2);
    r.p_cb = pair_p(2, 1);
    r.triangle_holds = r.p_ab <= r.p_ac + r.p_cb + 1e-12;
    return r;
}

} // namespace qbell
