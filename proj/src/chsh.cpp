#include "qbell/chsh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbell {

namespace {

Spin effective_second(Spin sb, Symmetry sym) {
    return sym == Symmetry::antisymmetric ? flip(sb) : sb;
}

/// gamma of the assignment written in slot order (a1, a2, b1, b2):
/// a1 b1 + a1 b2 + a2 b1 - a2 b2; always +-2.
int gamma_of_quadruple(const SignQuadruple& s) {
    const int a1 = sign_of(s.a1);
    const int a2 = sign_of(s.a2);
    const int b1 = sign_of(s.b1);
    const int b2 = sign_of(s.b2);
    return a1 * b1 + a1 * b2 + a2 * b1 - a2 * b2;
}

} // namespace

double pair_prob(const Axis& a, Spin sa, const Axis& b, Spin sb, Symmetry sym) {
    const Operator2 prod = projector(a, sa) * projector(b, effective_second(sb, sym));
    return (0.5 * prod.trace()).real();
}

double pair_prob_closed(const Axis& a, Spin sa, const Axis& b, Spin sb, Symmetry sym) {
    const double s = sign_of(sa) * sign_of(effective_second(sb, sym));
    return 0.25 * (1.0 + s * dot(a, b));
}

double chsh_closed_form(double theta_rad) {
    return 3.0 * std::cos(theta_rad) - std::cos(3.0 * theta_rad);
}

double chsh_dot_form(const AxisQuadruple& q) {
    const auto term = [](const Axis& a, const Axis& b) {
        const double same_sym = pair_prob(a, Spin::up, b, Spin::up, Symmetry::symmetric) +
                                pair_prob(a, Spin::down, b, Spin::down, Symmetry::symmetric);
        const double same_anti = pair_prob(a, Spin::up, b, Spin::up, Symmetry::antisymmetric) +
                                 pair_prob(a, Spin::down, b, Spin::down, Symmetry::antisymmetric);
        return same_sym - same_anti;
    };
    return term(q.a1, q.b1) + term(q.a1, q.b2) + term(q.a2, q.b1) - term(q.a2, q.b2);
}

double chsh_table_combination(const FourProbTable& t) {
    double plus = 0.0;
    double minus = 0.0;
    for (int idx = 0; idx < 16; ++idx) {
        if (gamma_of_quadruple(SignQuadruple::from_index(idx)) > 0) {
            plus += t.at(idx);
        } else {
            minus += t.at(idx);
        }
    }
    return 2.0 * (plus - minus);
}

double chsh_master_form(const FourProbTable& symmetric, const FourProbTable& antisymmetric) {
    if (symmetric.symmetry() != Symmetry::symmetric ||
        antisymmetric.symmetry() != Symmetry::antisymmetric) {
        throw std::invalid_argument("chsh_master_form: tables passed in the wrong order");
    }
    for (int idx = 0; idx < 16; ++idx) {
        const int flipped = SignQuadruple::from_index(idx).b_flipped().index();
        if (std::abs(antisymmetric.at(idx) - symmetric.at(flipped)) > 1e-12) {
            throw std::invalid_argument("chsh_master_form: tables do not describe the same axes");
        }
    }
    return 0.5 * (chsh_table_combination(symmetric) - chsh_table_combination(antisymmetric));
}

double three_prob(const Axis& a, const Axis& b, const Axis& c, Spin s1, Spin s2, Spin s3,
                  Symmetry sym) {
    const double v1 = sign_of(s1);
    const double v2 = sign_of(effective_second(s2, sym));
    const double v3 = sign_of(s3);
    return (1.0 + v1 * v2 * dot(a, b) + v1 * v3 * dot(a, c) + v2 * v3 * dot(b, c)) / 8.0;
}

Complex three_prob_permutation_average(const Axis& a, const Axis& b, const Axis& c, Spin s1,
                                       Spin s2, Spin s3, Symmetry sym) {
    const std::array<Operator2, 3> proj = {projector(a, s1),
                                           projector(b, effective_second(s2, sym)),
                                           projector(c, s3)};
    std::array<int, 3> order = {0, 1, 2};
    Complex acc = 0.0;
    int count = 0;
    do {
        const Operator2 prod = proj[static_cast<size_t>(order[0])] *
                               proj[static_cast<size_t>(order[1])] *
                               proj[static_cast<size_t>(order[2])];
        acc += 0.5 * prod.trace();
        ++count;
    } while (std::next_permutation(order.begin(), order.end()));
    return acc / static_cast<double>(count);
}

BellCheck bell_inequality_check(const Axis& a, const Axis& b, const Axis& c) {
    BellCheck r{};
    r.p_ab = pair_prob(a, Spin::up, b, Spin::up, Symmetry::antisymmetric);
    r.p_ac = pair_prob(a, Spin::up, c, Spin::up, Symmetry::antisymmetric);
    r.p_cb = pair_prob(c, Spin::up, b, Spin::up, Symmetry::antisymmetric);
    r.lhs = r.p_ab;
    r.rhs = r.p_ac + r.p_cb;
    r.violated = r.lhs > r.rhs + 1e-12;
    return r;
}

} // namespace qbell
