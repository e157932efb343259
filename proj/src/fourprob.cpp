#include "qbell/fourprob.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbell {

namespace {

double triple(const std::array<double, 3>& u, const Axis& v) {
    return u[0] * v.x() + u[1] * v.y() + u[2] * v.z();
}

/// Effective signs actually applied to the projectors: the antisymmetric
/// case reverses the signs on b1 and b2.
SignQuadruple effective_signs(const SignQuadruple& s, Symmetry sym) {
    return sym == Symmetry::antisymmetric ? s.b_flipped() : s;
}

} // namespace

std::string SignQuadruple::str() const {
    std::string out;
    for (int i = 0; i < 4; ++i) {
        out += (slot(i) == Spin::up) ? '+' : '-';
    }
    return out;
}

double delta(const AxisQuadruple& q) {
    return (dot(q.a1, q.a2) * dot(q.b1, q.b2) + dot(q.a1, q.b1) * dot(q.a2, q.b2) +
            dot(q.a1, q.b2) * dot(q.b1, q.a2)) /
           3.0;
}

std::array<double, 6> pair_dots(const AxisQuadruple& q) {
    return {dot(q.a1, q.a2), dot(q.a1, q.b1), dot(q.a1, q.b2),
            dot(q.a2, q.b1), dot(q.a2, q.b2), dot(q.b1, q.b2)};
}

Complex four_prob_complex(const AxisQuadruple& q, const SignQuadruple& s, Symmetry sym) {
    const SignQuadruple e = effective_signs(s, sym);
    const Operator2 prod = projector(q.a1, e.a1) * projector(q.a2, e.a2) *
                           projector(q.b1, e.b1) * projector(q.b2, e.b2);
    return 0.5 * prod.trace();
}

Complex four_prob_complex_closed(const AxisQuadruple& q, const SignQuadruple& s, Symmetry sym) {
    const SignQuadruple e = effective_signs(s, sym);
    const double l = sign_of(e.a1);
    const double m = sign_of(e.a2);
    const double n = sign_of(e.b1);
    const double t = sign_of(e.b2);

    const auto d = pair_dots(q);
    const double re_pairs =
        l * m * d[0] + l * n * d[1] + l * t * d[2] + m * n * d[3] + m * t * d[4] + n * t * d[5];

    const auto a1xa2 = cross(q.a1, q.a2);
    const auto b1xb2 = cross(q.b1, q.b2);
    const double im = l * m * n * triple(a1xa2, q.b1) + l * m * t * triple(a1xa2, q.b2) +
                      l * n * t * triple(b1xb2, q.a1) + m * n * t * triple(b1xb2, q.a2);

    // Quartic term of the ordered product a1 a2 b1 b2:
    // (a1.a2)(b1.b2) - (a1.b1)(a2.b2) + (a1.b2)(a2.b1).
    const double quartic = d[0] * d[5] - d[1] * d[4] + d[2] * d[3];

    return Complex((1.0 + re_pairs + l * m * n * t * quartic) / 16.0, im / 16.0);
}

double four_prob(const AxisQuadruple& q, const SignQuadruple& s, Symmetry sym) {
    const SignQuadruple e = effective_signs(s, sym);
    const auto d = pair_dots(q);
    const int idx = e.index();
    double acc = 1.0;
    for (int k = 0; k < 6; ++k) {
        acc += kernels::table16_sign(idx, k) * d[static_cast<size_t>(k)];
    }
    acc += kernels::table16_sign(idx, 6) * delta(q);
    return acc * 0.0625;
}

Complex four_prob_permutation_average(const AxisQuadruple& q, const SignQuadruple& s,
                                      Symmetry sym) {
    const SignQuadruple e = effective_signs(s, sym);
    const std::array<Operator2, 4> proj = {projector(q.a1, e.a1), projector(q.a2, e.a2),
                                           projector(q.b1, e.b1), projector(q.b2, e.b2)};
    std::array<int, 4> order = {0, 1, 2, 3};
    Complex acc = 0.0;
    int count = 0;
    do {
        const Operator2 prod = proj[static_cast<size_t>(order[0])] *
                               proj[static_cast<size_t>(order[1])] *
                               proj[static_cast<size_t>(order[2])] *
                               proj[static_cast<size_t>(order[3])];
        acc += 0.5 * prod.trace();
        ++count;
    } while (std::next_permutation(order.begin(), order.end()));
    return acc / static_cast<double>(count);
}

FourProbTable::FourProbTable(const std::array<double, 16>& entries, Symmetry sym)
    : p_(entries), sym_(sym) {
    double total = 0.0;
    for (double v : p_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("FourProbTable: non-finite entry");
        }
        total += v;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("FourProbTable: entries do not sum to one");
    }
    for (int i = 0; i < 16; ++i) {
        if (std::abs(p_[static_cast<size_t>(i)] - p_[static_cast<size_t>(15 - i)]) > 1e-12) {
            throw std::invalid_argument("FourProbTable: sign-flip symmetry broken");
        }
    }
}

double FourProbTable::sum() const {
    double total = 0.0;
    for (double v : p_) {
        total += v;
    }
    return total;
}

FourProbTable table2(const AxisQuadruple& q, Symmetry sym, kernels::Backend backend) {
    std::array<double, 16> sym_entries{};
    kernels::table16(pair_dots(q), delta(q), sym_entries, backend);
    if (sym == Symmetry::symmetric) {
        return {sym_entries, sym};
    }
    // Antisymmetric entries are the symmetric ones with the b signs flipped.
    std::array<double, 16> anti{};
    for (int i = 0; i < 16; ++i) {
        anti[static_cast<size_t>(i)] =
            sym_entries[static_cast<size_t>(SignQuadruple::from_index(i).b_flipped().index())];
    }
    return {anti, sym};
}

double marginal_pair(const FourProbTable& t, Slot keep_i, Slot keep_j, Spin si, Spin sj) {
    if (keep_i == keep_j) {
        throw std::invalid_argument("marginal_pair: kept slots must differ");
    }
    double total = 0.0;
    for (int idx = 0; idx < 16; ++idx) {
        const SignQuadruple s = SignQuadruple::from_index(idx);
        if (s.slot(static_cast<int>(keep_i)) == si && s.slot(static_cast<int>(keep_j)) == sj) {
            total += t.at(idx);
        }
    }
    return total;
}

Complex marginal_pair_complex(const AxisQuadruple& q, Symmetry sym, Slot keep_i, Slot keep_j,
                              Spin si, Spin sj) {
    if (keep_i == keep_j) {
        throw std::invalid_argument("marginal_pair_complex: kept slots must differ");
    }
    Complex total = 0.0;
    for (int idx = 0; idx < 16; ++idx) {
        const SignQuadruple s = SignQuadruple::from_index(idx);
        if (s.slot(static_cast<int>(keep_i)) == si && s.slot(static_cast<int>(keep_j)) == sj) {
            total += four_prob_complex(q, s, sym);
        }
    }
    return total;
}

} // namespace qbell
