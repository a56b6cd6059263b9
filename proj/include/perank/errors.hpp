#pragma once

#include <stdexcept>
#include <string>

namespace perank {

/// Operation outside the closed-form theory (e.g. the non-coprime
/// characterizations, which are open); callers may fall back to
/// empirical enumeration where offered.
class unsupported_error : public std::runtime_error {
  public:
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration or search exceeded its configured budget.
class resource_error : public std::runtime_error {
  public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Domain violations use std::domain_error, arithmetic overflow uses
// std::overflow_error.

}  // namespace perank
