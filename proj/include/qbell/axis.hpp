#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace qbell {

/// Unit direction vector for a measurement axis.
///
/// Construction normalizes inputs whose norm is within 1e-6 of one (tolerant
/// of text-parsed values) and rejects anything further off. After
/// construction the norm is exact to floating-point precision.
class Axis {
public:
    Axis(double x, double y, double z) : x_(x), y_(y), z_(z) {
        if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
            throw std::invalid_argument("Axis: non-finite component");
        }
        const double norm = std::sqrt(x * x + y * y + z * z);
        if (std::abs(norm - 1.0) > 1e-6) {
            throw std::invalid_argument("Axis: direction is not unit length");
        }
        x_ /= norm;
        y_ /= norm;
        z_ /= norm;
    }

    /// Axis in the x-z plane at the given angle from +z.
    static Axis from_planar_angle(double angle_rad) {
        return Axis(std::sin(angle_rad), 0.0, std::cos(angle_rad));
    }

    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }

private:
    double x_, y_, z_;
};

inline double dot(const Axis& a, const Axis& b) {
    return a.x() * b.x() + a.y() * b.y() + a.z() * b.z();
}

inline std::array<double, 3> cross(const Axis& a, const Axis& b) {
    return {a.y() * b.z() - a.z() * b.y(), a.z() * b.x() - a.x() * b.z(),
            a.x() * b.y() - a.y() * b.x()};
}

/// The four measurement directions of a two-station, two-setting experiment:
/// a1, a2 at station A and b1, b2 at station B.
struct AxisQuadruple {
    Axis a1, a2, b1, b2;

    const Axis& slot(int i) const {
        switch (i) {
        case 0: return a1;
        case 1: return a2;
        case 2: return b1;
        default: return b2;
        }
    }
};

/// Coplanar configuration with a1.b1 = a1.b2 = a2.b1 = cos(theta) and
/// a2.b2 = cos(3 theta). Realized in the x-z plane at planar angles
/// (a1, a2, b1, b2) = (theta, -theta, 0, 2 theta).
inline AxisQuadruple coplanar_axes(double theta_rad) {
    return {Axis::from_planar_angle(theta_rad), Axis::from_planar_angle(-theta_rad),
            Axis::from_planar_angle(0.0), Axis::from_planar_angle(2.0 * theta_rad)};
}

} // namespace qbell
