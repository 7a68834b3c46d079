#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stepwave/units.hpp"

namespace stepwave::cli {

/// Bad flags, bad config syntax, unknown keys or out-of-range values (exit 1).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File-system failures (exit 3).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KeySpec {
  std::string name;
  std::string help;
};

/// Keys accepted by a subcommand, including the shared scenario and output keys.
std::vector<KeySpec> keys_for(const std::string& command);

/// Flat `key = value` settings. Later sources override earlier ones.
class RunConfig {
 public:
  RunConfig(std::string command, std::map<std::string, std::string> values);

  const std::string& command() const { return command_; }
  bool has(const std::string& key) const { return values_.count(key) > 0; }
  const std::map<std::string, std::string>& values() const { return values_; }

  std::string text(const std::string& key, const std::string& fallback) const;
  double number(const std::string& key) const;
  double number(const std::string& key, double fallback) const;
  /// number() that must be > 0.
  double positive(const std::string& key, double fallback) const;
  int integer(const std::string& key, int fallback) const;
  std::vector<double> numbers(const std::string& key, const std::vector<double>& fallback) const;
  /// One of `choices`; throws UsageError otherwise.
  std::string choice(const std::string& key, const std::vector<std::string>& choices,
                     const std::string& fallback) const;

  SourceScenario scenario() const;
  UnitSystem unit_system() const;

 private:
  std::string command_;
  std::map<std::string, std::string> values_;
};

/// Parses `key = value` lines; `#` starts a comment. Throws UsageError on
/// malformed lines or unknown keys, IoError when the file cannot be read.
std::map<std::string, std::string> read_config_file(const std::string& path,
                                                    const std::string& command);

/// Fails with UsageError when a key is not accepted by the command.
void check_keys(const std::map<std::string, std::string>& values, const std::string& command);

}  // namespace stepwave::cli
