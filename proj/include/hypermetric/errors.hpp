#pragma once

#include <stdexcept>
#include <string>

namespace hypermetric {

/// Violated precondition or invariant (maps to CLI exit code 2).
class contract_error : public std::runtime_error {
public:
  explicit contract_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Iteration that failed to converge, singular evaluation, etc. (exit code 3).
class numeric_error : public std::runtime_error {
public:
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hypermetric
