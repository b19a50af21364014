#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace raywig {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in Hilbert spaces of different dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A zero (or numerically zero) vector where a state was required.
class ZeroVectorError : public Error {
public:
    using Error::Error;
};

/// Phase comparison requested between orthogonal states.
class OrthogonalityError : public Error {
public:
    explicit OrthogonalityError(const std::string& what, std::ptrdiff_t index = -1)
        : Error(what), index_(index) {}

    /// Index of the offending segment in a discrete curve, or -1.
    std::ptrdiff_t index() const noexcept { return index_; }

private:
    std::ptrdiff_t index_;
};

/// Geodesic endpoints coincident or orthogonal.
class DegenerateGeodesicError : public Error {
public:
    using Error::Error;
};

/// Triangle with a coincident or orthogonal vertex pair.
class DegenerateTriangleError : public Error {
public:
    using Error::Error;
};

/// Argument outside the documented domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A numerical identity failed beyond tolerance.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Bounded random search found no suitable sample.
class SearchExhaustedError : public Error {
public:
    using Error::Error;
};

/// Vector orthogonal to the reference; the pointwise lift is undefined there.
class NotInPcError : public Error {
public:
    using Error::Error;
};

/// The supplied ray map does not preserve overlaps.
class NotIsometryError : public Error {
public:
    using Error::Error;
};

/// Deformation start lies on the Im-vanishing boundary.
class OnBoundaryError : public Error {
public:
    using Error::Error;
};

/// Malformed or invalid input file.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace raywig
