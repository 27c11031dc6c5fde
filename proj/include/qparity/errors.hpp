#pragma once

#include <stdexcept>
#include <string>

namespace qparity {

/// Operands of a binary series operation live in different coefficient domains.
class DomainMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Constant term is not invertible in the coefficient domain.
class NotAUnit : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Request exceeds what exhaustive enumeration is allowed to attempt.
class ResourceLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace qparity
