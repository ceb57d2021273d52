#pragma once

#include <array>
#include <cstddef>

namespace mpa360 {

// Coordinate conventions
// ----------------------
// Main 3D system (x, y, z): y horizontal, z vertical, x perpendicular to
// both. The default camera sits at the origin and looks in negative
// x-direction. Spherical angles: theta = arccos(z) in [0, pi] (polar),
// phi = atan2(y, x) wrapped to [0, 2*pi) (azimuthal). At the poles
// (theta in {0, pi}) phi is reported as 0.
//
// Rotations are active, right-handed, about the named axis. The motion
// plane set uses:
//
//   FrontBack:  identity
//   LeftRight:  +pi/2 about z   [  0 -1  0 ;  1  0  0 ;  0  0  1 ]
//   TopBottom:  +pi/2 about y   [  0  0  1 ;  0  1  0 ; -1  0  0 ]
//
// All matrices are row-major. With these choices the real image plane of
// FrontBack faces -x, LeftRight faces +y, and TopBottom faces -z (the
// bottom hemisphere); the opposite directions land on the virtual plane.

/// Unit 3-vector on the sphere. Construction normalizes; degenerate or
/// non-finite input is rejected with std::invalid_argument.
struct SphereCoord {
    double x;
    double y;
    double z;

    SphereCoord(double x, double y, double z);

    /// Skips normalization. Caller guarantees unit norm.
    static SphereCoord unchecked(double x, double y, double z) noexcept;

    double norm() const noexcept;

private:
    struct unchecked_tag {};
    SphereCoord(double x, double y, double z, unchecked_tag) noexcept
        : x(x), y(y), z(z) {}
};

/// theta in [0, pi], phi in [0, 2*pi).
struct SphericalAngles {
    double theta;
    double phi;

    SphericalAngles(double theta, double phi);
};

/// Orthonormal 3x3 matrix with det +1, row-major. The validating
/// constructor enforces R^T R = I and det(R) = 1 within 1e-12; the
/// inverse is the transpose by construction.
class RotationMatrix {
public:
    explicit RotationMatrix(const std::array<double, 9>& rows);

    static RotationMatrix identity() noexcept;
    /// Skips validation. Caller guarantees orthonormality.
    static RotationMatrix unchecked(const std::array<double, 9>& rows) noexcept;

    double at(int row, int col) const noexcept { return m_[static_cast<std::size_t>(row * 3 + col)]; }
    const std::array<double, 9>& data() const noexcept { return m_; }

    RotationMatrix transposed() const noexcept;
    SphereCoord apply(const SphereCoord& s) const noexcept;
    RotationMatrix operator*(const RotationMatrix& rhs) const noexcept;

    bool operator==(const RotationMatrix& rhs) const noexcept { return m_ == rhs.m_; }

private:
    RotationMatrix() = default;
    std::array<double, 9> m_{};
};

enum class MotionPlaneKind {
    FrontBack,
    LeftRight,
    TopBottom,
    Custom,
};

/// A perspective image plane orientation in 3D space on which motion is
/// modeled as pure 2D translation.
class MotionPlane {
public:
    MotionPlane(MotionPlaneKind kind);  // NOLINT — deliberately implicit for the three canonical planes
    static MotionPlane custom(const RotationMatrix& rotation);

    MotionPlaneKind kind() const noexcept { return kind_; }
    const RotationMatrix& rotation() const noexcept { return rotation_; }

    bool operator==(const MotionPlane& rhs) const noexcept;

private:
    MotionPlane(MotionPlaneKind kind, const RotationMatrix& rotation)
        : kind_(kind), rotation_(rotation) {}

    MotionPlaneKind kind_;
    RotationMatrix rotation_;
};

SphereCoord sphere_from_angles(const SphericalAngles& angles) noexcept;
SphericalAngles angles_from_sphere(const SphereCoord& s);

/// The plane's rotation matrix; FrontBack returns the identity.
const RotationMatrix& plane_rotation(const MotionPlane& plane) noexcept;

const char* plane_name(MotionPlaneKind kind) noexcept;

}  // namespace mpa360
