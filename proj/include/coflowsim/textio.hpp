#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "coflowsim/error.hpp"

// Locale-free number formatting/parsing. Output files must be byte-stable
// across machines, so everything goes through to_chars/from_chars (shortest
// round-trip form for doubles).

namespace coflowsim {

inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string format_int(std::int64_t v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text, const std::string& what) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw ParseError("bad " + what + ": '" + std::string(text) + "' is not a number");
  return v;
}

inline std::int64_t parse_int(std::string_view text, const std::string& what) {
  std::int64_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw ParseError("bad " + what + ": '" + std::string(text) + "' is not an integer");
  return v;
}

}  // namespace coflowsim
