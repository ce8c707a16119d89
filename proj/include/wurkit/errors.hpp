#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wurkit {

// Malformed textual or binary input. position() is the zero-based offset of
// the first offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A configuration or argument violating a documented precondition.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request is well-formed but has no valid result (duty cycle above 1,
// negative fitted coefficients, codebook capacity exceeded).
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what, std::vector<double> residuals = {})
      : std::runtime_error(what), residuals_(std::move(residuals)) {}
  const std::vector<double>& residuals() const { return residuals_; }

 private:
  std::vector<double> residuals_;
};

}  // namespace wurkit
