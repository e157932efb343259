#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qbell::audits {

/// Result of one positivity audit: the two sides of the inequality under
/// test and, when the bound broke, the configuration that broke it.
struct AuditReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool bound_respected = true;
    std::optional<std::string> witness; // present iff !bound_respected
};

/// Discrete hidden-variable density: a signed weight per lambda value plus
/// +-1 outcome tables A(axis, lambda) for three axis labels (a, b, c). The
/// second station's outcome is the perfect anticorrelation B = -A. Weights
/// must sum to one; negative weights are allowed deliberately.
struct SignedDensity {
    std::vector<double> weights;
    std::vector<std::array<int, 3>> outcomes; // outcomes[lambda][axis] in {-1, +1}

    void validate() const; // throws std::invalid_argument on malformed input

    /// Expectation -sum_lambda rho A(x) A(y) of the product of the two
    /// stations' outcomes.
    double correlation(int axis_x, int axis_y) const;
};

/// Bound chain of the original three-axis proof:
/// |P(a,b) - P(a,c)| <= sum_lambda rho [1 - A(b)A(c)], valid whenever every
/// weight is nonnegative.
AuditReport bell64_audit(const SignedDensity& d);

/// Searches two-point signed densities with weights (1.5, -0.5) for a
/// violating outcome table; the returned report carries the witness.
AuditReport bell64_signed_instance();

/// Random nonnegative densities; returns the report with the smallest
/// margin, which must still respect the bound.
AuditReport bell64_random_audit(int instances, uint64_t seed);

/// Mean of |n'' n' - 1| over +-1 pairs, both by direct summation and by the
/// frequency form 2 (1 - N1/N); in [0, 2] for nonnegative frequencies.
AuditReport stapp71_audit_pairs(const std::vector<std::pair<int, int>>& pairs);

/// Frequency form with possibly signed counts of the summand values 0 and 2.
AuditReport stapp71_audit(double n_zero, double n_two);

/// Values of (sqrt2 rA + rB + rB')^2 over the eight sign triples, with
/// multiplicities. Exactly {2, (2-sqrt2)^2, (2+sqrt2)^2}.
std::map<double, int> stapp85_summand_values();

/// Mean of the squared summand from (possibly signed) frequencies of the
/// three values; >= (2 - sqrt2)^2 whenever all frequencies are nonnegative.
AuditReport stapp85_audit(double n_sqrt2, double n_plus, double n_minus);

/// Threshold on n_plus below which the mean turns negative, in the
/// rearranged-form convention -(n + n_minus (2 - sqrt2)) / (2 + sqrt2).
double stapp85_negative_threshold(double n_total, double n_minus);

/// Real-valued outcomes in [-1, 1]: max |a1 (b1 + b2) + a2 (b1 - b2)| over a
/// grid stays 2, attained only where |b1| = |b2| = 1, so relaxing +-1
/// outcomes does not move the CHSH bound.
AuditReport bell71_audit(int points_per_axis = 21);

/// Signed-frequency escape of the CHSH bound: the paired nonnegative
/// instance respects |C| <= 2, the signed one exceeds it.
AuditReport chsh_signed_audit(long long n_plus2, long long n_minus2);

} // namespace qbell::audits
