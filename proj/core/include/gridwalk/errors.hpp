#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gridwalk {

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Domain/validation failures: bad grid data, unknown names, inapplicable ops.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Malformed input text or files.
class ParseError : public Error {
public:
    using Error::Error;
};

// A walk step that does not apply at the current vertex. Carries the
// offending 0-based step position.
class DecodeError : public Error {
public:
    DecodeError(std::size_t position, const std::string& what)
        : Error(what + " (at step position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace gridwalk
