#pragma once

#include <optional>

#include "mpa360/geometry.hpp"

namespace mpa360 {

// Projections between the unit sphere and 2D image planes.
//
// Equirectangular (ERP): u = phi / (2*pi) * U, v = theta / pi * V. The
// continuous coordinate maps to the angle directly, with no half-pixel
// offset; integer raster sampling sites sit at integer coordinates. On
// the inverse path u is wrapped modulo U (the sphere is horizontally
// periodic) and v is clamped to [0, V].
//
// Generalized perspective: the camera looks in -x. Incident angle
// theta' = arccos(-x), azimuth phi' = atan2(-z, y). Rays with
// theta' < pi/2 hit the real image plane (vip = false), rays with
// theta' > pi/2 the virtual image plane on the opposite side of the
// lens (vip = true). Radius r = f * tan(theta') resp. f * tan(pi - theta'),
// and (u, v) = r * (cos phi', sin phi'). Note the plane's u axis is
// antiparallel to the ERP u axis at the front optical center, while
// the v axes are parallel; see the motion model docs.

/// Continuous 2D image-plane coordinate in pixels.
struct PixelCoord {
    double u = 0.0;
    double v = 0.0;
};

/// ERP raster geometry. Width U and height V in pixels, both >= 2.
/// Standard ERP rasters have U == 2V; other aspect ratios are accepted
/// (is_standard_aspect() lets callers warn).
struct ErpFormat {
    int width;
    int height;

    ErpFormat(int width, int height);

    bool is_standard_aspect() const noexcept { return width == 2 * height; }
};

/// Perspective camera intrinsics: focal length in pixels, > 0.
struct PerspectiveFormat {
    double focal_length;

    explicit PerspectiveFormat(double focal_length);
};

/// Point on a perspective image plane plus the plane selector:
/// vip = true means the virtual image plane.
struct PerspectivePoint {
    PixelCoord coord;
    bool vip = false;
};

/// Rays within this angle (radians) of theta' == pi/2 are treated as
/// grazing; the projection is singular there.
inline constexpr double kGrazingEpsilon = 1e-9;

PixelCoord erp_forward(const SphereCoord& s, const ErpFormat& fmt);
SphereCoord erp_inverse(const PixelCoord& p, const ErpFormat& fmt);

/// Returns std::nullopt for grazing rays.
std::optional<PerspectivePoint> perspective_forward_opt(const SphereCoord& s,
                                                        const PerspectiveFormat& fmt) noexcept;
/// Throws GrazingRayError for grazing rays.
PerspectivePoint perspective_forward(const SphereCoord& s, const PerspectiveFormat& fmt);
SphereCoord perspective_inverse(const PerspectivePoint& pp, const PerspectiveFormat& fmt);

/// f = 1 / tan(pi / V): matches the perspective pixel density at the
/// optical center to the ERP pixel density at the equator. Requires V >= 3.
double default_focal_length(const ErpFormat& fmt);

/// Shortest circular difference a - b modulo the ERP width.
double wrap_delta_u(double a, double b, int width) noexcept;

}  // namespace mpa360
