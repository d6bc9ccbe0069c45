#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pindex {

// Unusable configuration or catalog (exit code 1 at the CLI).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file: CSV syntax, bad header, unparsable number (exit 2).
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        base(what),
        line(line) {}
  std::string base;
  std::size_t line;
};

// Structurally broken data: dangling ids, duplicate persons, ... (exit 2).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem failure (exit 3).
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pindex
