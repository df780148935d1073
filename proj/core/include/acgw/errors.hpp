#pragma once

#include <stdexcept>
#include <string>

namespace acgw {

/// Morphism or object data that does not satisfy the instance's checks.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operation called on inputs that do not fit together (mismatched endpoints, degrees, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A construction that should be impossible to fail on valid input did fail.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace acgw
