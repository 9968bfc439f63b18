#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mega {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for non-positive counts, radii or degenerate areas.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// A file was readable but its content is wrong. `field()` names the
/// offending entry, e.g. "coverage_radius" or "clients[12]".
class MalformedFile : public Error {
 public:
  MalformedFile(std::string field, const std::string& what)
      : Error("malformed file: " + field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Carries every violation found while validating a configuration.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "invalid configuration:";
    for (const auto& s : v) out += "\n  - " + s;
    return out;
  }

  std::vector<std::string> violations_;
};

}  // namespace mega
