#pragma once

#include <stdexcept>
#include <string>

namespace lstree {

/// Raised when input data or numeric parameters violate a module contract.
/// The message is prefixed with the module that rejected the input.
class data_error : public std::runtime_error {
 public:
  data_error(const std::string& module, const std::string& message)
      : std::runtime_error(module + ": " + message), module_(module) {}

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

/// Raised for malformed command lines and service queries.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace lstree
