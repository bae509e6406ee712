#pragma once

#include <stdexcept>
#include <string>

namespace transit {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file; message carries file and line.
struct parse_error : error {
  parse_error(const std::string& file, int line, const std::string& what)
      : error(file + ":" + std::to_string(line) + ": " + what) {}
};

// Referential integrity or invariant violation in otherwise well-formed data.
struct validation_error : error {
  using error::error;
};

struct io_error : error {
  using error::error;
};

// Enumeration exceeded a configured budget.
struct budget_error : error {
  using error::error;
};

// An engine declined to run because its preconditions do not hold.
struct refusal_error : error {
  using error::error;
};

// Loaded artifact disagrees with the requested configuration.
struct artifact_mismatch_error : error {
  using error::error;
};

}  // namespace transit
