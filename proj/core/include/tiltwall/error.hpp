#pragma once

#include <stdexcept>
#include <string>

namespace tiltwall {

/// Base class for every error the engine raises. `name()` is the stable
/// identifier surfaced by the CLI (e.g. "RankZero", "NotInLattice").
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message);

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Malformed textual input (literals, command-line values).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error("ParseError", message) {}
};

/// A structurally invalid fixture file.
class MalformedFixture : public Error {
 public:
  MalformedFixture(const std::string& file, const std::string& field, const std::string& message);
};

}  // namespace tiltwall
