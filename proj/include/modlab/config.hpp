#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "modlab/errors.hpp"

namespace modlab {

using Elem = std::uint32_t;

inline constexpr const char* engine_version = "0.3.0";

/// Size limits for explicit-table construction. Everything in the engine is
/// brute force, so these bound the work of every scan.
struct Caps {
  std::size_t ring_order = 16;
  std::size_t module_order = 64;
  /// Hom-set enumeration aborts once this many morphisms have been found.
  std::size_t hom_count = std::size_t{1} << 20;
  /// enumerate_lep walks subsets of the left-ideal set.
  std::size_t filter_left_ideals = 16;

  bool operator==(const Caps&) const = default;
};

inline void check_cap(std::size_t value, std::size_t cap, const std::string& what) {
  if (value > cap)
    throw CapExceeded(what + " " + std::to_string(value) + " exceeds cap " + std::to_string(cap));
}

} // namespace modlab
