#pragma once

#include <stdexcept>
#include <string>

namespace suspsplit {

/// Raised on malformed inputs and violated preconditions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by checked machine arithmetic; callers retry in arbitrary precision.
class OverflowError : public Error {
public:
    OverflowError() : Error("integer overflow") {}
};

} // namespace suspsplit
