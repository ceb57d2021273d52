#pragma once

#include <stdexcept>
#include <string>

namespace mpa360 {

/// Ray is numerically parallel to the perspective image planes
/// (incident angle within kGrazingEpsilon of pi/2).
class GrazingRayError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A motion translation would move a point across the real/virtual
/// image plane boundary on the target motion plane; the resulting
/// vector cannot reproduce the same spherical shift.
class NonRepresentableError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DimensionMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raw video file ends before the requested frame.
class FileTooShortError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File size or raster dimensions inconsistent with the declared geometry.
class BadGeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mpa360
