#include "transit/core/csv.hpp"

#include <charconv>

namespace transit {

void split_fields(const std::string& line, char sep, std::vector<std::string>& out) {
  out.clear();
  std::size_t begin = 0;
  while (true) {
    auto pos = line.find(sep, begin);
    if (pos == std::string::npos) {
      out.emplace_back(line.substr(begin));
      return;
    }
    out.emplace_back(line.substr(begin, pos - begin));
    begin = pos + 1;
  }
}

csv_reader::csv_reader(const std::filesystem::path& file,
                       const std::vector<std::string>& expected_header)
    : file_(file.string()), in_(file) {
  if (!in_) {
    throw io_error("cannot open " + file_);
  }
  std::string header;
  if (!std::getline(in_, header)) {
    throw parse_error(file_, 1, "missing header row");
  }
  if (!header.empty() && header.back() == '\r') {
    header.pop_back();
  }
  ++line_;
  std::vector<std::string> cols;
  split_fields(header, ',', cols);
  if (cols != expected_header) {
    std::string want;
    for (const auto& c : expected_header) {
      if (!want.empty()) want += ',';
      want += c;
    }
    throw parse_error(file_, 1, "unexpected header '" + header + "', want '" + want + "'");
  }
  num_columns_ = expected_header.size();
}

bool csv_reader::next(std::vector<std::string>& fields) {
  std::string row;
  while (std::getline(in_, row)) {
    ++line_;
    if (!row.empty() && row.back() == '\r') {
      row.pop_back();
    }
    if (row.empty()) {
      continue;
    }
    split_fields(row, ',', fields);
    if (fields.size() != num_columns_) {
      fail("expected " + std::to_string(num_columns_) + " fields, got " +
           std::to_string(fields.size()));
    }
    return true;
  }
  return false;
}

std::uint32_t csv_reader::to_u32(const std::string& field, const char* what) const {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    fail(std::string("invalid ") + what + " '" + field + "'");
  }
  return value;
}

std::int32_t csv_reader::to_i32(const std::string& field, const char* what) const {
  std::int32_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    fail(std::string("invalid ") + what + " '" + field + "'");
  }
  return value;
}

}  // namespace transit
