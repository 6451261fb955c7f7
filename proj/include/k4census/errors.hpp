#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace k4c {

/// Base of every error thrown by the library. The C API maps each subclass
/// to one status code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph6 (or other textual) input.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error("parse error at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Argument outside the mathematical domain of an operation (n = 0 for a
/// ratio, i = j for a codegree, p = 0 for a blow-up factor).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Request beyond a configured size limit (exhaustive search past n = 11,
/// canonical labeling past n = 16, graphs past 2^16 vertices).
class CapabilityError : public Error {
public:
    using Error::Error;
};

/// A checked counter left its accumulator range.
class OverflowError : public Error {
public:
    using Error::Error;
};

}  // namespace k4c
