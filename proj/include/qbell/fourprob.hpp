#pragma once

#include <array>
#include <string>

#include "qbell/axis.hpp"
#include "qbell/complex2.hpp"
#include "qbell/kernels.hpp"
#include "qbell/pauli.hpp"

namespace qbell {

/// Spin-pair wavefunction symmetry. The antisymmetric (singlet) case is the
/// symmetric one with the signs on the b axes reversed.
enum class Symmetry { symmetric, antisymmetric };

/// One of the four measurement slots (a1, a2, b1, b2).
enum class Slot : int { a1 = 0, a2 = 1, b1 = 2, b2 = 3 };

constexpr bool is_b_slot(Slot s) { return s == Slot::b1 || s == Slot::b2; }

/// Outcome signs for the four slots.
struct SignQuadruple {
    Spin a1, a2, b1, b2;

    Spin slot(int i) const {
        switch (i) {
        case 0: return a1;
        case 1: return a2;
        case 2: return b1;
        default: return b2;
        }
    }

    /// Index with a1 the high bit and b2 the low bit; set bit = down.
    int index() const {
        return ((a1 == Spin::down) << 3) | ((a2 == Spin::down) << 2) |
               ((b1 == Spin::down) << 1) | (b2 == Spin::down);
    }

    static SignQuadruple from_index(int idx) {
        return {spin_from_sign((idx & 8) ? -1 : 1), spin_from_sign((idx & 4) ? -1 : 1),
                spin_from_sign((idx & 2) ? -1 : 1), spin_from_sign((idx & 1) ? -1 : 1)};
    }

    SignQuadruple negated() const { return {flip(a1), flip(a2), flip(b1), flip(b2)}; }

    /// Signs on the b slots reversed (symmetric <-> antisymmetric map).
    SignQuadruple b_flipped() const { return {a1, a2, flip(b1), flip(b2)}; }

    /// "++-+" style label.
    std::string str() const;
};

/// The quartic invariant of a four-axis configuration: the mean of the three
/// pairings [(a1.a2)(b1.b2) + (a1.b1)(a2.b2) + (a1.b2)(b1.a2)] / 3.
double delta(const AxisQuadruple& q);

/// The six pairwise dot products in table order:
/// a1.a2, a1.b1, a1.b2, a2.b1, a2.b2, b1.b2.
std::array<double, 6> pair_dots(const AxisQuadruple& q);

/// Joint probability of four simultaneous spin measurements, evaluated as
/// (1/2) Tr of the ordered projector product. Complex in general; the
/// argument order is a1, a2, b1, b2.
Complex four_prob_complex(const AxisQuadruple& q, const SignQuadruple& s, Symmetry sym);

/// The same quantity from the closed-form expansion of the projector trace
/// (pairwise dot terms, imaginary triple products, quartic term). Mutual
/// oracle for four_prob_complex.
Complex four_prob_complex_closed(const AxisQuadruple& q, const SignQuadruple& s, Symmetry sym);

/// Symmetrized joint probability: real closed form
/// (1/16) {1 + sum of signed pairwise dots + (sign product) * delta}.
double four_prob(const AxisQuadruple& q, const SignQuadruple& s, Symmetry sym);

/// Symmetrization by brute force: the average of four_prob_complex over all
/// 24 orderings of the (sign, axis) argument pairs. Oracle for four_prob;
/// the imaginary part cancels to rounding error.
Complex four_prob_permutation_average(const AxisQuadruple& q, const SignQuadruple& s,
                                      Symmetry sym);

/// All sixteen symmetrized joint probabilities for one axis configuration.
/// Entries may be negative; they always sum to one and satisfy
/// P(q) == P(-q). Construction rejects tables breaking either invariant.
class FourProbTable {
public:
    FourProbTable(const std::array<double, 16>& entries, Symmetry sym);

    double at(int index) const { return p_[static_cast<size_t>(index)]; }
    double at(const SignQuadruple& s) const { return at(s.index()); }
    Symmetry symmetry() const { return sym_; }
    double sum() const;

private:
    std::array<double, 16> p_;
    Symmetry sym_;
};

/// Table of four_prob over all sixteen sign quadruples.
FourProbTable table2(const AxisQuadruple& q, Symmetry sym,
                     kernels::Backend backend = kernels::Backend::auto_detect);

/// Sum of the four entries consistent with the two kept slots and signs;
/// the remaining two slots are summed over. Equals the pairwise probability
/// (1 +- si sj vi.vj)/4 regardless of the sign of individual entries.
double marginal_pair(const FourProbTable& t, Slot keep_i, Slot keep_j, Spin si, Spin sj);

/// The same marginal taken from the unsymmetrized complex distribution; the
/// imaginary parts cancel in the sum.
Complex marginal_pair_complex(const AxisQuadruple& q, Symmetry sym, Slot keep_i, Slot keep_j,
                              Spin si, Spin sj);

} // namespace qbell
