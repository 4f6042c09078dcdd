#pragma once

#include <stdexcept>
#include <string>

namespace kgsentry {

// Bad entity/relation declarations, e.g. re-interning a label under a
// different kind.
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

// Unknown label or individual.
struct LookupError : std::runtime_error {
  explicit LookupError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration (counts, thresholds, missing roles).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input data (event files, checkpoints, lexica).
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite training loss.
struct TrainingDivergence : std::runtime_error {
  TrainingDivergence(const std::string& msg, int epoch_idx)
      : std::runtime_error(msg), epoch(epoch_idx) {}
  int epoch;
};

// Class-expression syntax errors carry the byte offset and what was expected.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t offset_, std::string expected_)
      : std::runtime_error(msg), offset(offset_), expected(std::move(expected_)) {}
  std::size_t offset;
  std::string expected;
};

}  // namespace kgsentry
