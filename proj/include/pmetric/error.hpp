#pragma once

#include <stdexcept>
#include <string>

namespace pmetric {

/// Bad input: malformed vectors, non-prime moduli, cycles, out-of-range indices.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration or table would exceed its configured budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the verification suites when a checked property fails.
class PropertyViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pmetric
