#pragma once

#include <stdexcept>
#include <string>

namespace gelfand {

/// Raised when an operation is called outside the parameter range where it is
/// defined (odd m passed to the shooting code, n <= 2m for the Emden map, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a computation fails numerically (step-size underflow,
/// non-finite state, exp overflow).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gelfand
