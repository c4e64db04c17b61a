#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tiltwall {

struct FixtureResult {
  std::string file;
  std::string name;
  bool passed = false;
  std::string detail;  // mismatch description, empty on pass
};

struct VerifySummary {
  std::vector<FixtureResult> results;
  std::vector<std::string> warnings;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

/// Runs one fixture object. Throws MalformedFixture(file, field, ...) on schema errors.
FixtureResult run_fixture(const nlohmann::json& fixture, const std::string& file,
                          std::vector<std::string>& warnings);

/// Runs every *.json file under dir (sorted by name). A file holds one
/// fixture object or an array of them.
VerifySummary verify_directory(const std::filesystem::path& dir);

}  // namespace tiltwall
