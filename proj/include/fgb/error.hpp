#pragma once

#include <stdexcept>
#include <string>

namespace fgb {

/// Malformed arguments: out-of-range ids, probabilities outside [0,1], etc.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The request is well-formed but beyond what the library will do exactly
/// (e.g. exact MIS above the configured vertex limit).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Experiment configuration problems. Carries the offending field and, when
/// known, the 1-based source line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, int line, const std::string& what)
      : std::runtime_error(format(field, line, what)), field_(std::move(field)), line_(line), message_(what) {}

  const std::string& field() const noexcept { return field_; }
  int line() const noexcept { return line_; }
  /// The diagnostic without the field/line prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  static std::string format(const std::string& field, int line, const std::string& what) {
    std::string out = "config";
    if (line > 0) out += ":" + std::to_string(line);
    if (!field.empty()) out += ": field '" + field + "'";
    return out + ": " + what;
  }

  std::string field_;
  int line_;
  std::string message_;
};

/// A checked inequality did not hold.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fgb
