#pragma once

#include <stdexcept>
#include <string>

namespace solcurves {

// Root of the library's error hierarchy. Every throw in this library is a
// subclass of Error, so callers can catch one type at the boundary.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Division by a jet whose constant term is exactly zero (degenerate curve
// data, e.g. a vanishing x' where a quotient of derivatives is required).
class DivisionByZeroJet : public Error {
public:
    using Error::Error;
};

// log/sqrt of a jet whose constant term is not strictly positive.
class DomainError : public Error {
public:
    using Error::Error;
};

// A derivative of order k > jet order was requested.
class OrderExceeded : public Error {
public:
    using Error::Error;
};

// An operation consumed more derivative slots than the jets carry
// (e.g. a covariant derivative applied to order-0 data).
class OrderExhausted : public Error {
public:
    using Error::Error;
};

// A curve expected to be parametrized by arc length is not.
class NotUnitSpeed : public Error {
public:
    using Error::Error;
};

// The torsion quotient's denominator vanishes at the base point.
class TorsionUndefined : public Error {
public:
    using Error::Error;
};

// Geodesic curvature at (or below) the threshold where Frenet data
// stops being defined.
class GeodesicDegeneracy : public Error {
public:
    using Error::Error;
};

// Two independent computations of the same frame quantity disagree
// beyond tolerance.
class FrameInconsistency : public Error {
public:
    using Error::Error;
};

// The integrated frame lost orthonormality beyond tolerance.
class FrameDrift : public Error {
public:
    using Error::Error;
};

// Structurally invalid parameters (wrong branch id, non-positive scale, ...).
class InvalidParams : public Error {
public:
    using Error::Error;
};

// A Killing field vanishes where an angle with it was requested.
class ZeroField : public Error {
public:
    using Error::Error;
};

// A root scan that is expected to find roots found none.
class NoRootsFound : public Error {
public:
    using Error::Error;
};

}  // namespace solcurves
