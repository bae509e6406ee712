#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace transit {

// FNV-1a, 64 bit. Used for content hashes in run manifests.
struct fnv1a64 {
  std::uint64_t value = 0xcbf29ce484222325ull;

  void update(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      value ^= p[i];
      value *= 0x100000001b3ull;
    }
  }

  void update(const std::string& s) { update(s.data(), s.size()); }
};

std::string hex64(std::uint64_t value);

// Hash of the given files' names and contents, order-sensitive.
std::string hash_files(const std::vector<std::filesystem::path>& files);

}  // namespace transit
