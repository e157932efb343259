#pragma once

#include <utility>

#include "qbell/axis.hpp"
#include "qbell/complex2.hpp"

namespace qbell {

/// +-1 spin outcome / orientation label.
enum class Spin : int { up = +1, down = -1 };

constexpr int sign_of(Spin s) { return static_cast<int>(s); }

constexpr Spin flip(Spin s) { return s == Spin::up ? Spin::down : Spin::up; }

constexpr Spin spin_from_sign(int v) { return v >= 0 ? Spin::up : Spin::down; }

/// sigma . a = sigma_x a_x + sigma_y a_y + sigma_z a_z. Traceless, Hermitian,
/// squares to the identity.
Operator2 pauli_dot(const Axis& a);

/// Spin-1/2 projector (1 +- sigma.a)/2 onto the +-a eigenstate.
Operator2 projector(const Axis& a, Spin s);

/// Both sides of (sigma.a)(sigma.b) = (a.b) 1 + i sigma.(a x b), for callers
/// to compare entrywise.
std::pair<Operator2, Operator2> product_identity_sides(const Axis& a, const Axis& b);

/// Density matrix of an unpolarized spin-1/2 beam, diag(1/2, 1/2).
Operator2 unpolarized_density();

} // namespace qbell
