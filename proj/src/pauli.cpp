#include "qbell/pauli.hpp"

namespace qbell {

Operator2 pauli_dot(const Axis& a) {
    // [ az        ax - i ay ]
    // [ ax + i ay    -az    ]
    return {Complex(a.z(), 0.0), Complex(a.x(), -a.y()), Complex(a.x(), a.y()),
            Complex(-a.z(), 0.0)};
}

Operator2 projector(const Axis& a, Spin s) {
    const double half_sign = 0.5 * sign_of(s);
    return Complex(0.5, 0.0) * Operator2::identity() + Complex(half_sign, 0.0) * pauli_dot(a);
}

std::pair<Operator2, Operator2> product_identity_sides(const Axis& a, const Axis& b) {
    const Operator2 lhs = pauli_dot(a) * pauli_dot(b);
    const auto axb = cross(a, b);
    const Operator2 sigma_axb{Complex(axb[2], 0.0), Complex(axb[0], -axb[1]),
                              Complex(axb[0], axb[1]), Complex(-axb[2], 0.0)};
    const Operator2 rhs =
        Complex(dot(a, b), 0.0) * Operator2::identity() + Complex(0.0, 1.0) * sigma_axb;
    return {lhs, rhs};
}

Operator2 unpolarized_density() { return Complex(0.5, 0.0) * Operator2::identity(); }

} // namespace qbell
