#pragma once

#include "qbell/fourprob.hpp"

namespace qbell {

/// Joint probability of finding particle 1 in state sa along a and particle
/// 2 in state sb along b: (1 + sa sb a.b)/4 for the symmetric wavefunction,
/// (1 - sa sb a.b)/4 for the antisymmetric one. Evaluated as
/// (1/2) Tr[Pi(sa a) Pi(sb' b)].
double pair_prob(const Axis& a, Spin sa, const Axis& b, Spin sb, Symmetry sym);

/// Closed form of pair_prob; mutual oracle for the trace evaluation.
double pair_prob_closed(const Axis& a, Spin sa, const Axis& b, Spin sb, Symmetry sym);

/// CHSH correlation sum of the coplanar configuration: 3 cos(theta) - cos(3 theta).
double chsh_closed_form(double theta_rad);

/// CHSH correlation sum from dot products: a1.b1 + a1.b2 + a2.b1 - a2.b2,
/// each term assembled as the same-sign pair probability of the symmetric
/// wavefunction minus that of the antisymmetric one.
double chsh_dot_form(const AxisQuadruple& q);

/// The sixteen-term signed combination over a joint table: twice the sum of
/// the entries whose assignment has gamma = +2 minus those with gamma = -2.
/// Exposed for demonstrations on hand-built tables.
double chsh_table_combination(const FourProbTable& t);

/// CHSH correlation sum from the two master tables: half the difference of
/// the signed combination over the symmetric and antisymmetric tables. The
/// tables must describe the same axes (antisymmetric = b-flipped symmetric).
double chsh_master_form(const FourProbTable& symmetric, const FourProbTable& antisymmetric);

/// Symmetrized joint probability for three spin measurements:
/// (1 + s1 s2' a.b + s1 s3 a.c + s2' s3 b.c)/8, the middle slot playing the
/// particle-2 role (sign reversed in the antisymmetric case).
double three_prob(const Axis& a, const Axis& b, const Axis& c, Spin s1, Spin s2, Spin s3,
                  Symmetry sym);

/// Brute-force oracle for three_prob: (1/2) Tr of the projector product
/// averaged over all six orderings.
Complex three_prob_permutation_average(const Axis& a, const Axis& b, const Axis& c, Spin s1,
                                       Spin s2, Spin s3, Symmetry sym);

struct BellCheck {
    double p_ab; // P(a+, b+)
    double p_ac; // P(a+, c+)
    double p_cb; // P(c+, b+)
    double lhs;
    double rhs;
    bool violated;
};

/// Pairwise-probability inequality P(a+,b+) <= P(a+,c+) + P(c+,b+) for the
/// antisymmetric (singlet) state.
BellCheck bell_inequality_check(const Axis& a, const Axis& b, const Axis& c);

} // namespace qbell
