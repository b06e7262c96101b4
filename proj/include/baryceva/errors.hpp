#pragma once

#include <stdexcept>
#include <string>

namespace baryceva {

/// Base class for every domain error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

class NonPositiveSide : public Error {
public:
    using Error::Error;
};

class TriangleInequalityViolated : public Error {
public:
    using Error::Error;
};

/// Barycentric point with all three coordinates zero.
class InvalidPoint : public Error {
public:
    using Error::Error;
};

/// Barycentric line with all three coefficients zero.
class InvalidLine : public Error {
public:
    using Error::Error;
};

/// Coordinate sum is zero, so the point cannot be normalized.
class PointAtInfinity : public Error {
public:
    using Error::Error;
};

class CoincidentPoints : public Error {
public:
    using Error::Error;
};

class CoincidentLines : public Error {
public:
    using Error::Error;
};

/// An operation required a point with coordinate sum exactly 1.
class NotNormalized : public Error {
public:
    using Error::Error;
};

/// The scaling factor k must be a nonzero rational.
class ZeroK : public Error {
public:
    using Error::Error;
};

/// A cevian endpoint coincides with a vertex, so its ratio is undefined.
class DegenerateCevian : public Error {
public:
    using Error::Error;
};

/// The cevians through the unscaled pedal feet do not concur.
class PedalCeviansNotConcurrent : public Error {
public:
    using Error::Error;
};

/// O = G, so the Euler line degenerates to a point.
class EquilateralEulerLineUndefined : public Error {
public:
    using Error::Error;
};

/// Text did not parse as "num/den" or an integer.
class MalformedRational : public Error {
public:
    using Error::Error;
};

}  // namespace baryceva
