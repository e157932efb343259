#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace qbell {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Dense complex 2x2 matrix. Immutable value semantics; every operation
/// returns a fresh value. Entries are validated finite at construction.
class Operator2 {
public:
    Operator2() : e_{} {}

    Operator2(Complex e00, Complex e01, Complex e10, Complex e11) : e_{e00, e01, e10, e11} {
        for (const Complex& z : e_) {
            if (!is_finite(z)) {
                throw std::invalid_argument("Operator2: non-finite entry");
            }
        }
    }

    static Operator2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Complex operator()(int row, int col) const { return e_[static_cast<size_t>(row * 2 + col)]; }

    Complex trace() const { return e_[0] + e_[3]; }

    Operator2 adjoint() const {
        return {std::conj(e_[0]), std::conj(e_[2]), std::conj(e_[1]), std::conj(e_[3])};
    }

    friend Operator2 operator+(const Operator2& a, const Operator2& b) {
        return {a.e_[0] + b.e_[0], a.e_[1] + b.e_[1], a.e_[2] + b.e_[2], a.e_[3] + b.e_[3]};
    }

    friend Operator2 operator-(const Operator2& a, const Operator2& b) {
        return {a.e_[0] - b.e_[0], a.e_[1] - b.e_[1], a.e_[2] - b.e_[2], a.e_[3] - b.e_[3]};
    }

    friend Operator2 operator*(const Operator2& a, const Operator2& b) {
        return {a.e_[0] * b.e_[0] + a.e_[1] * b.e_[2], a.e_[0] * b.e_[1] + a.e_[1] * b.e_[3],
                a.e_[2] * b.e_[0] + a.e_[3] * b.e_[2], a.e_[2] * b.e_[1] + a.e_[3] * b.e_[3]};
    }

    friend Operator2 operator*(Complex s, const Operator2& m) {
        return {s * m.e_[0], s * m.e_[1], s * m.e_[2], s * m.e_[3]};
    }

    /// Largest entrywise absolute difference; the metric used by all the
    /// algebraic-identity checks.
    friend double max_abs_diff(const Operator2& a, const Operator2& b) {
        double d = 0.0;
        for (size_t i = 0; i < 4; ++i) {
            d = std::max(d, std::abs(a.e_[i] - b.e_[i]));
        }
        return d;
    }

    bool is_hermitian(double tol) const { return max_abs_diff(*this, adjoint()) <= tol; }

    bool is_idempotent(double tol) const { return max_abs_diff(*this * *this, *this) <= tol; }

private:
    std::array<Complex, 4> e_;
};

inline Complex trace(const Operator2& m) { return m.trace(); }

} // namespace qbell
