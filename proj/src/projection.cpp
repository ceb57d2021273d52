#include "mpa360/projection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mpa360/errors.hpp"

namespace mpa360 {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

ErpFormat::ErpFormat(int width, int height) : width(width), height(height) {
    if (width < 2 || height < 2) {
        throw std::invalid_argument("ErpFormat: width and height must be >= 2");
    }
}

PerspectiveFormat::PerspectiveFormat(double focal_length) : focal_length(focal_length) {
    if (!(focal_length > 0.0) || !std::isfinite(focal_length)) {
        throw std::invalid_argument("PerspectiveFormat: focal length must be positive");
    }
}

PixelCoord erp_forward(const SphereCoord& s, const ErpFormat& fmt) {
    const SphericalAngles a = angles_from_sphere(s);
    return {a.phi / (2.0 * kPi) * fmt.width, a.theta / kPi * fmt.height};
}

SphereCoord erp_inverse(const PixelCoord& p, const ErpFormat& fmt) {
    double u = std::fmod(p.u, static_cast<double>(fmt.width));
    if (u < 0.0) {
        u += fmt.width;
    }
    const double v = std::clamp(p.v, 0.0, static_cast<double>(fmt.height));
    const double phi = u / fmt.width * 2.0 * kPi;
    const double theta = v / fmt.height * kPi;
    const double st = std::sin(theta);
    return SphereCoord::unchecked(st * std::cos(phi), st * std::sin(phi), std::cos(theta));
}

std::optional<PerspectivePoint> perspective_forward_opt(const SphereCoord& s,
                                                        const PerspectiveFormat& fmt) noexcept {
    const double theta_p = std::acos(std::clamp(-s.x, -1.0, 1.0));
    if (std::abs(theta_p - kPi / 2.0) <= kGrazingEpsilon) {
        return std::nullopt;
    }
    const double phi_p = std::atan2(-s.z, s.y);
    const bool vip = theta_p > kPi / 2.0;
    const double r = vip ? fmt.focal_length * std::tan(kPi - theta_p)
                         : fmt.focal_length * std::tan(theta_p);
    return PerspectivePoint{{r * std::cos(phi_p), r * std::sin(phi_p)}, vip};
}

PerspectivePoint perspective_forward(const SphereCoord& s, const PerspectiveFormat& fmt) {
    if (auto pp = perspective_forward_opt(s, fmt)) {
        return *pp;
    }
    throw GrazingRayError("perspective_forward: ray parallel to the image planes");
}

SphereCoord perspective_inverse(const PerspectivePoint& pp, const PerspectiveFormat& fmt) {
    const double r = std::hypot(pp.coord.u, pp.coord.v);
    const double phi_p = std::atan2(pp.coord.v, pp.coord.u);
    double theta_p = std::atan(r / fmt.focal_length);
    if (pp.vip) {
        theta_p = kPi - theta_p;
    }
    const double st = std::sin(theta_p);
    return SphereCoord::unchecked(-std::cos(theta_p), st * std::cos(phi_p), -st * std::sin(phi_p));
}

double default_focal_length(const ErpFormat& fmt) {
    if (fmt.height < 3) {
        throw std::invalid_argument("default_focal_length: requires V >= 3");
    }
    return 1.0 / std::tan(kPi / fmt.height);
}

double wrap_delta_u(double a, double b, int width) noexcept {
    const double w = static_cast<double>(width);
    double d = std::fmod(a - b, w);
    if (d > w / 2.0) {
        d -= w;
    } else if (d < -w / 2.0) {
        d += w;
    }
    return d;
}

}  // namespace mpa360
