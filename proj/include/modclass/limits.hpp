#pragma once

#include <cstdint>

namespace modclass {

// Process-wide caps. Set once from the CLI before any computation starts.
struct Limits {
  std::uint64_t max_field_size = std::uint64_t{1} << 20;
  std::size_t max_group_order = 200;
  int las_vegas_attempts = 200;
  std::uint64_t exhaustive_scan_cap = 4096;
};

Limits& limits();

}  // namespace modclass
