#pragma once

#include <stdexcept>
#include <string>

namespace coxlat {

// Bad user-supplied data: unparsable literals, indices out of range,
// mixing elements of distinct systems, labels outside the supported set.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation needed a root beyond the ambient depth cap, or could not
// certify completeness of a subsystem within the cap.  Callers recover by
// regenerating the ambient table with a larger cap.
struct truncation_error : std::runtime_error {
  int depth_cap;
  truncation_error(const std::string& what, int cap)
      : std::runtime_error(what), depth_cap(cap) {}
};

// The operation is well defined mathematically but outside what this
// library computes (e.g. Z-closure in a non-crystallographic system).
struct unsupported_error : std::runtime_error {
  explicit unsupported_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace coxlat
