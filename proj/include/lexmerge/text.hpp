#pragma once

// String helpers shared by the parsers and merge passes. Everything here
// operates on UTF-8 encoded std::string values.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lexmerge::text {

/// True if `s` is well-formed UTF-8 (no overlongs, surrogates or stray bytes).
bool is_valid_utf8(std::string_view s);

/// NFC-normalized copy of `s`. Input must be valid UTF-8.
std::string nfc(std::string_view s);

/// Number of extended grapheme clusters in `s`.
std::size_t grapheme_count(std::string_view s);

/// Number of code points in `s`.
std::size_t codepoint_count(std::string_view s);

/// `s` with its last `n` code points removed; empty if `s` is shorter.
std::string drop_last_codepoints(std::string_view s, std::size_t n);

std::string_view trim(std::string_view s);

/// Trims and collapses every internal whitespace run to one ASCII space.
std::string squeeze_spaces(std::string_view s);

bool has_whitespace(std::string_view s);

std::vector<std::string_view> split(std::string_view s, char sep);

std::string ascii_upper(std::string_view s);
std::string ascii_lower(std::string_view s);

template <typename Range>
std::string join(const Range& items, std::string_view sep) {
  std::string out;
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += sep;
    out += item;
    first = false;
  }
  return out;
}

}  // namespace lexmerge::text
