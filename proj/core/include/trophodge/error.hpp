#pragma once

#include <stdexcept>
#include <string>

namespace trophodge {

// code is a short machine-readable tag ("not-a-fan", "not-codim-1", ...)
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace trophodge
