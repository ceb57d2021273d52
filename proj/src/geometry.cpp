#include "mpa360/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mpa360 {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool finite3(double x, double y, double z) noexcept {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
}

}  // namespace

SphereCoord::SphereCoord(double x, double y, double z) : x(x), y(y), z(z) {
    if (!finite3(x, y, z)) {
        throw std::invalid_argument("SphereCoord: non-finite components");
    }
    const double n = std::sqrt(x * x + y * y + z * z);
    if (n < 1e-12) {
        throw std::invalid_argument("SphereCoord: zero-length vector");
    }
    if (std::abs(n - 1.0) > 1e-9) {
        this->x /= n;
        this->y /= n;
        this->z /= n;
    }
}

SphereCoord SphereCoord::unchecked(double x, double y, double z) noexcept {
    return SphereCoord(x, y, z, unchecked_tag{});
}

double SphereCoord::norm() const noexcept {
    return std::sqrt(x * x + y * y + z * z);
}

SphericalAngles::SphericalAngles(double theta, double phi) : theta(theta), phi(phi) {
    if (!(std::isfinite(theta) && std::isfinite(phi))) {
        throw std::invalid_argument("SphericalAngles: non-finite angles");
    }
    if (theta < 0.0 || theta > kPi) {
        throw std::invalid_argument("SphericalAngles: theta outside [0, pi]");
    }
    // Wrap phi into [0, 2*pi).
    const double two_pi = 2.0 * kPi;
    double p = std::fmod(phi, two_pi);
    if (p < 0.0) {
        p += two_pi;
    }
    this->phi = p;
}

RotationMatrix::RotationMatrix(const std::array<double, 9>& rows) : m_(rows) {
    // R^T R = I within 1e-12, det(R) = +1 within 1e-12.
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double dot = 0.0;
            for (int k = 0; k < 3; ++k) {
                dot += at(k, i) * at(k, j);
            }
            const double expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(dot - expected) > 1e-12) {
                throw std::invalid_argument("RotationMatrix: not orthonormal");
            }
        }
    }
    const double det = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                       at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                       at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    if (std::abs(det - 1.0) > 1e-12) {
        throw std::invalid_argument("RotationMatrix: determinant is not +1");
    }
}

RotationMatrix RotationMatrix::identity() noexcept {
    RotationMatrix r;
    r.m_ = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    return r;
}

RotationMatrix RotationMatrix::unchecked(const std::array<double, 9>& rows) noexcept {
    RotationMatrix r;
    r.m_ = rows;
    return r;
}

RotationMatrix RotationMatrix::transposed() const noexcept {
    RotationMatrix r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            r.m_[static_cast<std::size_t>(i * 3 + j)] = at(j, i);
        }
    }
    return r;
}

SphereCoord RotationMatrix::apply(const SphereCoord& s) const noexcept {
    return SphereCoord::unchecked(at(0, 0) * s.x + at(0, 1) * s.y + at(0, 2) * s.z,
                                  at(1, 0) * s.x + at(1, 1) * s.y + at(1, 2) * s.z,
                                  at(2, 0) * s.x + at(2, 1) * s.y + at(2, 2) * s.z);
}

RotationMatrix RotationMatrix::operator*(const RotationMatrix& rhs) const noexcept {
    RotationMatrix r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double acc = 0.0;
            for (int k = 0; k < 3; ++k) {
                acc += at(i, k) * rhs.at(k, j);
            }
            r.m_[static_cast<std::size_t>(i * 3 + j)] = acc;
        }
    }
    return r;
}

namespace {

const RotationMatrix kIdentity = RotationMatrix::identity();
// +pi/2 about z (active, right-handed).
const RotationMatrix kLeftRight = RotationMatrix::unchecked({0, -1, 0, 1, 0, 0, 0, 0, 1});
// +pi/2 about y (active, right-handed).
const RotationMatrix kTopBottom = RotationMatrix::unchecked({0, 0, 1, 0, 1, 0, -1, 0, 0});

}  // namespace

MotionPlane::MotionPlane(MotionPlaneKind kind) : kind_(kind), rotation_(kIdentity) {
    switch (kind) {
        case MotionPlaneKind::FrontBack:
            break;
        case MotionPlaneKind::LeftRight:
            rotation_ = kLeftRight;
            break;
        case MotionPlaneKind::TopBottom:
            rotation_ = kTopBottom;
            break;
        case MotionPlaneKind::Custom:
            throw std::invalid_argument("MotionPlane: custom planes require a rotation matrix");
    }
}

MotionPlane MotionPlane::custom(const RotationMatrix& rotation) {
    return MotionPlane(MotionPlaneKind::Custom, rotation);
}

bool MotionPlane::operator==(const MotionPlane& rhs) const noexcept {
    if (kind_ != rhs.kind_) {
        return false;
    }
    return kind_ != MotionPlaneKind::Custom || rotation_ == rhs.rotation_;
}

SphereCoord sphere_from_angles(const SphericalAngles& angles) noexcept {
    const double st = std::sin(angles.theta);
    return SphereCoord::unchecked(st * std::cos(angles.phi), st * std::sin(angles.phi),
                                  std::cos(angles.theta));
}

SphericalAngles angles_from_sphere(const SphereCoord& s) {
    const double z = std::clamp(s.z, -1.0, 1.0);
    const double theta = std::acos(z);
    double phi = std::atan2(s.y, s.x);  // atan2(0, 0) == 0: pole convention
    if (phi < 0.0) {
        phi += 2.0 * kPi;
    }
    return SphericalAngles(theta, phi);
}

const RotationMatrix& plane_rotation(const MotionPlane& plane) noexcept {
    return plane.rotation();
}

const char* plane_name(MotionPlaneKind kind) noexcept {
    switch (kind) {
        case MotionPlaneKind::FrontBack: return "frontback";
        case MotionPlaneKind::LeftRight: return "leftright";
        case MotionPlaneKind::TopBottom: return "topbottom";
        case MotionPlaneKind::Custom: return "custom";
    }
    return "unknown";
}

}  // namespace mpa360
