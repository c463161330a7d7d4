#pragma once

// Content-addressed result cache. One JSON file per entry, named by the
// SHA-256 of the request key, holding the key, the payload and a checksum of
// the payload. Entries are locked with flock while read or written.

#include <filesystem>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "modclass/serialize.hpp"

namespace modclass::cli {

std::string sha256_hex(std::string_view data);

class Cache {
 public:
  Cache(std::filesystem::path dir, std::ostream& warnings);

  /// Cached payload for `key`, or compute(), stored before returning.
  /// Corrupt or mismatched entries are reported, evicted and recomputed.
  Json fetch_or_compute(const std::string& key, const std::function<Json()>& compute);

  std::filesystem::path entry_path(const std::string& key) const;

 private:
  std::filesystem::path dir_;
  std::ostream& warnings_;
};

}  // namespace modclass::cli
