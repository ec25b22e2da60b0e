#pragma once

#include <stdexcept>
#include <string>

namespace ftstab {

/// Thrown when a linear solve breaks down or a simulation state stops being
/// finite. The CLI maps this to exit code 3; all validation-type errors
/// (std::invalid_argument, std::domain_error, std::out_of_range) map to 2.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ftstab
