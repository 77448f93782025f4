#pragma once

#include <stdexcept>
#include <string>

namespace sector_radius {

// Base for every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Wrong matrix size for the operation (non-square, not 2x2, empty).
class DimensionError : public Error {
public:
    using Error::Error;
};

// Structural precondition failed, e.g. a matrix expected to be Hermitian is not.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Scalar argument out of its admissible range.
class ParameterError : public Error {
public:
    using Error::Error;
};

// A family's feasibility inequality is violated; the message names it.
class ConstraintError : public Error {
public:
    using Error::Error;
};

// Input collapses the construction (zero matrix, one-dimensional span).
class DegenerateError : public Error {
public:
    using Error::Error;
};

// An iterative construction could not satisfy its postconditions.
class ConstructionError : public Error {
public:
    using Error::Error;
};

}  // namespace sector_radius
