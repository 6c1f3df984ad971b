#pragma once

/// @file vector_cache.hpp
/// @brief On-disk cache of exact residue vectors.
///
/// One file per bundle key (family, weight, p, n) maps descriptor strings to
/// integer coefficient lists. File names are FNV-1a hashes of the kernel
/// version and the key; the key is repeated inside the file and checked on
/// load. Writes go to a temporary file followed by an atomic rename.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qmzv/rational.hpp"

namespace qmzv {

inline constexpr int kCacheFormatVersion = 1;
inline constexpr std::string_view kKernelVersion = "qmzv-kernel-1";

std::uint64_t fnv1a64(std::string_view data);

class VectorCache {
 public:
  using Bundle = std::map<std::string, std::vector<Integer>>;

  explicit VectorCache(std::string dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }
  const std::string& dir() const { return dir_; }

  /// Empty bundle when missing, stale or unreadable.
  Bundle load(const std::string& key) const;
  /// Throws std::runtime_error when the directory is not writable.
  void store(const std::string& key, const Bundle& bundle) const;
  std::string path_for(const std::string& key) const;

 private:
  std::string dir_;
};

}  // namespace qmzv
