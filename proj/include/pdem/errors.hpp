#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdem {

/// Base class of every error raised by the library.  The CLI prints
/// `what()` behind an `error:` prefix, so messages stay on one line.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotFound : public Error {
public:
    using Error::Error;
};

class NonPositiveMass : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class DiscontinuityError : public Error {
public:
    using Error::Error;
};

class GridMismatch : public Error {
public:
    using Error::Error;
};

class NonPositiveEnergy : public Error {
public:
    using Error::Error;
};

/// Raised at E == V0, where the transmitted wavevector vanishes.
class DegenerateEnergy : public Error {
public:
    using Error::Error;
};

class SolverError : public Error {
public:
    SolverError(const std::string& what, std::size_t iterations)
        : Error(what + " (after " + std::to_string(iterations) + " iterations)"),
          iterations_(iterations) {}

    std::size_t iterations() const noexcept { return iterations_; }

private:
    std::size_t iterations_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace pdem
