#pragma once

#include <stdexcept>
#include <string>

namespace oraclegram {

/// Malformed input document (bad JSON, wrong shape, invalid rows).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration or tensor construction exceeded its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oraclegram
