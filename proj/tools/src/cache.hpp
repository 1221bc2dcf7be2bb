#pragma once

#include "rtint/modular.hpp"

#include <filesystem>
#include <optional>
#include <ostream>

namespace rtint::cli {

/// On-disk cache of fusion and S tables keyed by (type, rank, r). Each file
/// carries the SHA-256 of its payload; a mismatch is reported and the entry
/// is recomputed.
class TableCache {
 public:
  explicit TableCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

  /// Cache directory from the flag, else $RTINT_CACHE_DIR, else none.
  static TableCache from_environment(const std::string& flag_value);

  bool enabled() const noexcept { return dir_.has_value(); }
  std::filesystem::path path_for(const RootSystem& rs, int r) const;

  /// Loads or computes; writes a fresh entry on a miss. Diagnostics go to `log`.
  ModularData load(const RootSystem& rs, int r, std::ostream& log) const;

  /// Last lookup status, for tests: "off", "hit", "miss" or "corrupt".
  const std::string& last_status() const noexcept { return status_; }

 private:
  std::optional<std::filesystem::path> dir_;
  mutable std::string status_ = "off";
};

std::string sha256_hex(const std::string& data);

}  // namespace rtint::cli
