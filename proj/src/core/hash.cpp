#include "transit/core/hash.hpp"

#include <fstream>

#include "transit/core/errors.hpp"

namespace transit {

std::string hex64(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

std::string hash_files(const std::vector<std::filesystem::path>& files) {
  fnv1a64 h;
  char buf[1 << 16];
  for (const auto& f : files) {
    h.update(f.filename().string());
    std::ifstream in(f, std::ios::binary);
    if (!in) {
      throw io_error("cannot open " + f.string());
    }
    while (in) {
      in.read(buf, sizeof buf);
      h.update(buf, static_cast<std::size_t>(in.gcount()));
    }
  }
  return hex64(h.value);
}

}  // namespace transit
