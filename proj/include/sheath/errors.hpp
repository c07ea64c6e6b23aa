#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sheath {

/// Out-of-range physical or non-dimensional input.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Inconsistent or incomplete scheme/run configuration.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Config text that cannot be parsed; carries the 1-based line number.
class ConfigParseError : public ConfigError {
public:
  ConfigParseError(std::size_t line, const std::string& what)
      : ConfigError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A state that cannot be operated on (collapsed density, empty electron mass).
class DegenerateStateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace sheath
