#pragma once

#include <stdexcept>
#include <string>

namespace gwt {

// Base for every failure the library reports. Operational errors only: a
// computed verdict of "fails" or "undecidable" is never an exception.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "error"; }
};

class InvalidInput : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid_input"; }
};

// An exhaustive computation would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "budget_exceeded"; }
};

class Unsupported : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "unsupported"; }
};

}  // namespace gwt
