#pragma once

#include <stdexcept>
#include <string>

namespace trapdamp {

// All library failures derive from trapdamp::error and carry a short
// machine-parsable code alongside the human-readable message.
class error : public std::runtime_error {
 public:
  error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Inputs violate a type invariant or an operation precondition.
class invalid_parameter : public error {
 public:
  explicit invalid_parameter(const std::string& msg)
      : error("invalid_parameter", msg) {}
};

// A numerical procedure could not produce a usable result
// (fit did not converge, singular inversion, division guard, ...).
class numeric_failure : public error {
 public:
  numeric_failure(std::string code, const std::string& msg)
      : error(std::move(code), msg) {}
};

}  // namespace trapdamp
