#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace clfe {

std::string_view trim(std::string_view text);
std::string to_lower_ascii(std::string_view text);
// Per-codepoint Unicode lowercase; ill-formed bytes are kept.
std::string to_lower(std::string_view text);

// Term tokenizer shared by head-overlap filtering, alignment, featurization
// and evaluation: Unicode-lowercase, split on whitespace and punctuation
// (ASCII punctuation/symbols plus Unicode P* categories), drop empties.
std::vector<std::string> terms(std::string_view text);
std::set<std::string> term_set(std::string_view text);

// |a ∩ b| / |a ∪ b|, 0 when both are empty.
double jaccard(const std::set<std::string>& a, const std::set<std::string>& b);

namespace utf8 {

// A decoded unit. Ill-formed bytes decode one at a time with valid == false
// so callers can copy them through untouched.
struct Unit {
  char32_t codepoint;
  std::size_t offset;
  std::size_t length;
  bool valid;
};

std::vector<Unit> decode(std::string_view text);
void append(std::string& out, char32_t codepoint);
std::size_t count_codepoints(std::string_view text);

}  // namespace utf8

// Unicode NFC via ICU. Invalid UTF-8 is a ValidationError.
std::string nfc(std::string_view text);

}  // namespace clfe
