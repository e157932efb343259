#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qbell/audits.hpp"
#include "qbell/rng.hpp"

using namespace qbell;
using namespace qbell::audits;

TEST_CASE("bell64: point mass density trivially respects the bound") {
    SignedDensity d;
    d.weights = {1.0};
    d.outcomes = {{1, -1, 1}};
    const AuditReport r = bell64_audit(d);
    CHECK(r.bound_respected);
    CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("bell64: 1000 random nonnegative densities respect the bound") {
    const AuditReport worst = bell64_random_audit(1000, 2024);
    CHECK(worst.bound_respected);
    CHECK(worst.lhs <= worst.rhs + 1e-12);
}

TEST_CASE("bell64: signed density produces a violation witness") {
    const AuditReport r = bell64_signed_instance();
    CHECK_FALSE(r.bound_respected);
    REQUIRE(r.witness.has_value());
    CHECK(r.lhs > r.rhs);

    // Replay: the hand value of one violating configuration. With
    // rho = (1.5, -0.5), A1 = (+,+,+), A2 = (+,-,+):
    // P(a,b) = -(1.5 - 0.5 * -1) = -2, P(a,c) = -(1.5 - 0.5) = -1,
    // lhs = 1, rhs = 1.5 * 0 + (-0.5) * 2 = -1.
    SignedDensity d;
    d.weights = {1.5, -0.5};
    d.outcomes = {{1, 1, 1}, {1, -1, 1}};
    const AuditReport replay = bell64_audit(d);
    CHECK_FALSE(replay.bound_respected);
    CHECK(replay.lhs == doctest::Approx(1.0));
    CHECK(replay.rhs == doctest::Approx(-1.0));
}

TEST_CASE("bell64 validation") {
    SignedDensity d;
    d.weights = {0.5, 0.4};
    d.outcomes = {{1, 1, 1}, {1, 1, 1}};
    CHECK_THROWS_AS(bell64_audit(d), std::invalid_argument); // sum != 1
    d.weights = {0.5, 0.5};
    d.outcomes = {{1, 2, 1}, {1, 1, 1}};
    CHECK_THROWS_AS(bell64_audit(d), std::invalid_argument); // outcome not +-1
}

TEST_CASE("stapp71: direct summation agrees with the frequency form") {
    rng::CounterRng gen(61);
    for (int i = 0; i < 1000; ++i) {
        std::vector<std::pair<int, int>> pairs;
        const int n = 1 + static_cast<int>(gen.next_below(200));
        for (int k = 0; k < n; ++k) {
            pairs.emplace_back((gen.next_u32() & 1u) ? 1 : -1, (gen.next_u32() & 1u) ? 1 : -1);
        }
        const AuditReport r = stapp71_audit_pairs(pairs);
        CHECK(r.bound_respected);
        CHECK(r.lhs >= 0.0);
        CHECK(r.lhs <= 2.0);
    }
}

TEST_CASE("stapp71 examples") {
    // All products +1: mean 0.
    CHECK(stapp71_audit_pairs({{1, 1}, {-1, -1}}).lhs == doctest::Approx(0.0));
    // Even split: mean 1.
    CHECK(stapp71_audit(500.0, 500.0).lhs == doctest::Approx(1.0));
    // Signed frequencies escape the [0, 2] structure.
    const AuditReport r = stapp71_audit(1300.0, -300.0);
    CHECK(r.lhs == doctest::Approx(-0.6));
    CHECK_FALSE(r.bound_respected);
    CHECK(r.witness.has_value());
}

TEST_CASE("stapp85: the squared summand takes exactly three values") {
    const auto values = stapp85_summand_values();
    REQUIRE(values.size() == 3);
    const double s2 = std::sqrt(2.0);
    auto it = values.begin();
    CHECK(it->first == doctest::Approx((2.0 - s2) * (2.0 - s2)));
    CHECK(it->second == 2);
    ++it;
    CHECK(it->first == doctest::Approx(2.0));
    CHECK(it->second == 4);
    ++it;
    CHECK(it->first == doctest::Approx((2.0 + s2) * (2.0 + s2)));
    CHECK(it->second == 2);
}

TEST_CASE("stapp85: nonnegative frequencies keep the mean above (2 - sqrt2)^2") {
    rng::CounterRng gen(62);
    const double s2 = std::sqrt(2.0);
    for (int i = 0; i < 1000; ++i) {
        const double n1 = gen.next_below(1000);
        const double n2 = gen.next_below(1000);
        const double n3 = gen.next_below(1000);
        if (n1 + n2 + n3 == 0.0) {
            continue;
        }
        const AuditReport r = stapp85_audit(n1, n2, n3);
        CHECK(r.bound_respected);
        CHECK(r.lhs >= (2.0 - s2) * (2.0 - s2) - 1e-12);
    }
    // Pure n1: mean exactly 2.
    CHECK(stapp85_audit(100.0, 0.0, 0.0).lhs == doctest::Approx(2.0));
}

TEST_CASE("stapp85: sufficiently negative n2 sinks the mean") {
    const AuditReport r = stapp85_audit(130.0, -30.0, 0.0);
    CHECK(r.lhs == doctest::Approx(-0.897056274848).epsilon(1e-9));
    CHECK_FALSE(r.bound_respected);
    CHECK(r.witness.has_value());
    // -30 is beyond the rearranged-form threshold for n = 100, n3 = 0.
    const double threshold = stapp85_negative_threshold(100.0, 0.0);
    CHECK(threshold == doctest::Approx(-29.2893218813).epsilon(1e-9));
    CHECK(-30.0 < threshold);
}

TEST_CASE("bell71: grid maximum of |gamma| is 2, attained only with a unit b outcome") {
    const AuditReport r = bell71_audit(21);
    CHECK(r.bound_respected);
    CHECK(std::abs(r.lhs - 2.0) <= 1e-12);

    // Center of the cube: gamma = 0; a corner: gamma = 2.
    // (covered by the grid since 21 points include -1, 0, +1)
    const AuditReport coarse = bell71_audit(3);
    CHECK(coarse.bound_respected);
    CHECK(std::abs(coarse.lhs - 2.0) <= 1e-12);

    // The maximum is not confined to full +-1 corners: with aligned unit
    // a outcomes and b1 = 1, gamma = 2 for any b2.
    CHECK(std::abs(1.0 * (1.0 + 0.3) + 1.0 * (1.0 - 0.3)) == doctest::Approx(2.0));
}

TEST_CASE("bell71: strict interior points stay strictly below 2") {
    rng::CounterRng gen(63);
    for (int i = 0; i < 10000; ++i) {
        const double a1 = 2.0 * gen.next_double() - 1.0;
        const double a2 = 2.0 * gen.next_double() - 1.0;
        const double b1 = 2.0 * gen.next_double() - 1.0;
        const double b2 = 2.0 * gen.next_double() - 1.0;
        const double g = std::abs(a1 * (b1 + b2) + a2 * (b1 - b2));
        CHECK(g <= 2.0 + 1e-12);
        if (std::max(std::abs(b1), std::abs(b2)) < 1.0) {
            CHECK(g < 2.0);
        }
    }
}

TEST_CASE("chsh-signed audit pairs a passing and a violating instance") {
    const AuditReport ok = chsh_signed_audit(600, 400);
    CHECK(ok.bound_respected);
    CHECK(ok.lhs == doctest::Approx(0.4));

    const AuditReport bad = chsh_signed_audit(1100, -100);
    CHECK_FALSE(bad.bound_respected);
    CHECK(bad.lhs == doctest::Approx(2.4));
    CHECK(bad.witness.has_value());
}
