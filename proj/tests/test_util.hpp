#pragma once

#include <cmath>
#include <numbers>

#include "qbell/axis.hpp"
#include "qbell/fourprob.hpp"
#include "qbell/rng.hpp"

namespace qbell::testutil {

/// Uniform direction on the sphere.
inline Axis random_axis(rng::CounterRng& gen) {
    const double z = 1.0 - 2.0 * gen.next_double();
    const double phi = 2.0 * std::numbers::pi * gen.next_double();
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

inline AxisQuadruple random_quadruple(rng::CounterRng& gen) {
    return {random_axis(gen), random_axis(gen), random_axis(gen), random_axis(gen)};
}

inline Spin random_spin(rng::CounterRng& gen) {
    return (gen.next_u32() & 1u) ? Spin::up : Spin::down;
}

} // namespace qbell::testutil
