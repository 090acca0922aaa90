#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cpold/symfunc.hpp"
#include "cpold/unipoly.hpp"

namespace cpold {

/// Environment variable naming the default cache directory.
inline constexpr const char* kCacheDirEnv = "CPOLD_CACHE_DIR";
inline constexpr const char* kCacheFormatVersion = "cpold-chern-1";

/// One JSON file per (n, k) holding the monomial-basis coefficients of c_k.
/// Files with another format version or a bad checksum are ignored and rewritten.
class ChernCache {
 public:
  explicit ChernCache(std::filesystem::path dir);

  /// The directory from kCacheDirEnv, if set and nonempty.
  static std::optional<std::filesystem::path> default_dir();

  std::filesystem::path path_for(int n, int k) const;
  std::optional<BasisExpansion<UniPoly>> load(int n, int k);
  /// Writes to a temporary file and renames it into place.
  void store(int n, int k, const BasisExpansion<UniPoly>& monomial);

  const std::vector<std::string>& warnings() const { return warnings_; }
  int hits() const { return hits_; }
  int misses() const { return misses_; }

 private:
  std::filesystem::path dir_;
  std::vector<std::string> warnings_;
  int hits_ = 0;
  int misses_ = 0;
};

/// FNV-1a, 64 bit, as 16 hex digits.
std::string fnv1a_hex(const std::string& data);

}  // namespace cpold
