#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "qbell/pauli.hpp"
#include "qbell/rng.hpp"
#include "test_util.hpp"

using namespace qbell;

namespace {

/// Eigenvalues of a Hermitian 2x2 matrix, independent of the algebra under
/// test: mean of the diagonal +- sqrt(((d0-d1)/2)^2 + |offdiag|^2).
std::pair<double, double> hermitian_eigenvalues(const Operator2& m) {
    const double d0 = m(0, 0).real();
    const double d1 = m(1, 1).real();
    const double mid = 0.5 * (d0 + d1);
    const double disc = std::sqrt(0.25 * (d0 - d1) * (d0 - d1) + std::norm(m(0, 1)));
    return {mid + disc, mid - disc};
}

} // namespace

TEST_CASE("pauli_dot along z and x gives the basis matrices") {
    const Operator2 sz = pauli_dot(Axis(0, 0, 1));
    CHECK(sz(0, 0) == Complex(1.0, 0.0));
    CHECK(sz(1, 1) == Complex(-1.0, 0.0));
    CHECK(sz(0, 1) == Complex(0.0, 0.0));
    CHECK(sz(1, 0) == Complex(0.0, 0.0));

    const Operator2 sx = pauli_dot(Axis(1, 0, 0));
    CHECK(sx(0, 1) == Complex(1.0, 0.0));
    CHECK(sx(1, 0) == Complex(1.0, 0.0));
    CHECK(sx(0, 0) == Complex(0.0, 0.0));
}

TEST_CASE("pauli_dot on a diagonal axis is traceless with eigenvalues +-1") {
    const double s = 1.0 / std::sqrt(2.0);
    const Operator2 m = pauli_dot(Axis(s, 0.0, s));
    CHECK(std::abs(m.trace()) <= 1e-12);
    const auto [hi, lo] = hermitian_eigenvalues(m);
    CHECK(hi == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lo == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("pauli_dot squares to the identity for random axes") {
    rng::CounterRng gen(11);
    for (int i = 0; i < 100; ++i) {
        const Axis a = testutil::random_axis(gen);
        const Operator2 m = pauli_dot(a);
        CHECK(std::abs(m.trace()) <= 1e-12);
        CHECK(max_abs_diff(m * m, Operator2::identity()) <= 1e-12);
        CHECK(m.is_hermitian(1e-12));
    }
}

TEST_CASE("projector along z") {
    const Operator2 up = projector(Axis(0, 0, 1), Spin::up);
    CHECK(std::abs(up(0, 0) - 1.0) <= 1e-12);
    CHECK(std::abs(up(1, 1)) <= 1e-12);
    const Operator2 down = projector(Axis(0, 0, 1), Spin::down);
    CHECK(std::abs(down(0, 0)) <= 1e-12);
    CHECK(std::abs(down(1, 1) - 1.0) <= 1e-12);
}

TEST_CASE("projectors are Hermitian idempotents with unit trace") {
    rng::CounterRng gen(12);
    for (int i = 0; i < 100; ++i) {
        const Axis a = testutil::random_axis(gen);
        for (const Spin s : {Spin::up, Spin::down}) {
            const Operator2 p = projector(a, s);
            CHECK(p.is_hermitian(1e-12));
            CHECK(p.is_idempotent(1e-12));
            CHECK(std::abs(p.trace() - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("product identity: trivial cases") {
    const Axis z(0, 0, 1);
    auto [lhs, rhs] = product_identity_sides(z, z);
    CHECK(max_abs_diff(lhs, Operator2::identity()) <= 1e-12);
    CHECK(max_abs_diff(rhs, Operator2::identity()) <= 1e-12);

    // sigma_x sigma_y = i sigma_z
    auto [lhs2, rhs2] = product_identity_sides(Axis(1, 0, 0), Axis(0, 1, 0));
    const Operator2 i_sz{Complex(0, 1), 0.0, 0.0, Complex(0, -1)};
    CHECK(max_abs_diff(lhs2, i_sz) <= 1e-12);
    CHECK(max_abs_diff(rhs2, i_sz) <= 1e-12);
}

TEST_CASE("product identity holds for 1000 random axis pairs") {
    rng::CounterRng gen(13);
    for (int i = 0; i < 1000; ++i) {
        const Axis a = testutil::random_axis(gen);
        const Axis b = testutil::random_axis(gen);
        const auto [lhs, rhs] = product_identity_sides(a, b);
        CHECK(max_abs_diff(lhs, rhs) <= 1e-12);
    }
}

TEST_CASE("trace examples") {
    CHECK(trace(Operator2::identity()) == Complex(2.0, 0.0));
    CHECK(std::abs(trace(pauli_dot(Axis(0, 0, 1)))) <= 1e-12);

    // Explicit multiply: Tr[Pi(z+) Pi(x+)] = (1 + z.x)/2 = 1/2.
    const Operator2 prod = projector(Axis(0, 0, 1), Spin::up) * projector(Axis(1, 0, 0), Spin::up);
    CHECK(std::abs(trace(prod) - Complex(0.5, 0.0)) <= 1e-12);
}

TEST_CASE("unpolarized beam detects + along any axis with probability 1/2") {
    rng::CounterRng gen(14);
    for (int i = 0; i < 100; ++i) {
        const Axis a = testutil::random_axis(gen);
        const Complex p = trace(unpolarized_density() * projector(a, Spin::up));
        CHECK(std::abs(p - Complex(0.5, 0.0)) <= 1e-12);
    }
}

TEST_CASE("axis validation") {
    CHECK_THROWS_AS(Axis(0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Axis(1.1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Axis(std::nan(""), 0, 1), std::invalid_argument);

    // Near-unit input is normalized to machine precision.
    const Axis a(1.0 + 5e-7, 0, 0);
    CHECK(std::abs(dot(a, a) - 1.0) <= 1e-12);
}

TEST_CASE("operator2 rejects non-finite entries") {
    CHECK_THROWS_AS(Operator2(Complex(std::nan(""), 0), 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Operator2(Complex(0, std::numeric_limits<double>::infinity()), 0, 0, 0),
                    std::invalid_argument);
}
