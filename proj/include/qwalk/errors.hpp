#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

/// Bad argument or precondition at an API boundary.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Evolution requested past the preallocated lattice window.
class CapacityError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Function evaluated outside its mathematical domain (or at a divergence).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical invariant was broken by more than floating-point noise.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Command-line or config-file problem; the message names the offending token.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qwalk
