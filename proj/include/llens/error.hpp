#pragma once

#include <stdexcept>
#include <string>

namespace llens {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operand dimensions do not compose.
struct ShapeError : Error {
    using Error::Error;
};

// Caller-supplied values violate an operation's preconditions
// (empty inputs, unsorted sigma, zero weight vector, ...).
struct InputError : Error {
    using Error::Error;
};

// An iterative method failed to converge or a result is undefined
// (e.g. condition number of a rank-0 matrix).
struct NumericalError : Error {
    using Error::Error;
};

// A value lies outside the mathematical domain of the requested map.
// Carries the offending component index when there is one.
struct DomainError : Error {
    explicit DomainError(const std::string& what, long index = -1)
        : Error(what), component(index) {}
    long component;
};

// Layer inversion requested through a non-invertible activation.
struct NotInvertibleError : Error {
    using Error::Error;
};

// Malformed bytes: bad magic, bad tag, truncation, checksum mismatch.
struct FormatError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Training or image learning produced a non-finite loss.
struct DivergenceError : Error {
    explicit DivergenceError(const std::string& what, std::size_t at)
        : Error(what), step(at) {}
    std::size_t step;
};

}  // namespace llens
