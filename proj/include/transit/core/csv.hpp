#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "transit/core/errors.hpp"

namespace transit {

// Minimal comma-separated reader: no quoting, one record per line, a header
// row is required and checked against the expected column names.
class csv_reader {
 public:
  csv_reader(const std::filesystem::path& file,
             const std::vector<std::string>& expected_header);

  // Returns false at end of file. Blank lines are skipped.
  bool next(std::vector<std::string>& fields);

  int line() const { return line_; }
  const std::string& file() const { return file_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(file_, line_, msg);
  }

  std::uint32_t to_u32(const std::string& field, const char* what) const;
  std::int32_t to_i32(const std::string& field, const char* what) const;

 private:
  std::string file_;
  std::ifstream in_;
  int line_ = 0;
  std::size_t num_columns_ = 0;
};

void split_fields(const std::string& line, char sep, std::vector<std::string>& out);

}  // namespace transit
