#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hanoi_dimer {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured resource cap (vertices, memo entries, digits, terms) was hit.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// An internal invariant failed; indicates a generator or arithmetic bug.
class IntegrityError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed polynomial or cache text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace hanoi_dimer
