// Shortest round-trip decimal rendering of doubles.
#pragma once

#include <charconv>
#include <string>

namespace sik {

inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace sik
