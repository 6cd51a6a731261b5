#pragma once

#include <stdexcept>
#include <string>

namespace carter {

/// A configured cap (degree, order, cosets, classes) would be exceeded.
class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Arguments violate an operation's precondition (degree mismatch, element
/// outside the group, non-normal subgroup, ...).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A computed object failed an internal consistency check.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace carter
