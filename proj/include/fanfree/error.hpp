#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fanfree {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (vertex out of range, bad pattern, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A graph does not fit where it was asked to go.
class CapacityError : public Error {
public:
    using Error::Error;
};

class UnsupportedSizeError : public Error {
public:
    using Error::Error;
};

/// Malformed graph6 input. `offset` is the byte index of the offending character.
class DecodeError : public Error {
public:
    DecodeError(std::size_t offset, const std::string& what)
        : Error("graph6 decode error at byte " + std::to_string(offset) + ": " + what),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace fanfree
