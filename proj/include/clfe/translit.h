#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "clfe/language.h"

namespace clfe {

inline constexpr char32_t kDevanagariStart = 0x0900;
inline constexpr char32_t kBlockSize = 128;

// A 128-codepoint Brahmic block laid out in parallel with Devanagari.
struct ScriptBlock {
  std::string_view script;
  char32_t block_start;

  bool contains(char32_t cp) const {
    return cp >= block_start && cp < block_start + kBlockSize;
  }
};

// Block whose characters are rewritten for `lang`: Bengali, Gujarati, Tamil,
// Telugu or Kannada. hi/mr are already Devanagari and en is exempt, so they
// have none.
std::optional<ScriptBlock> source_block(Language lang);

// Whether `cp` is an assigned character of the Unicode block starting at
// `block_start` (one of the six embedded blocks); false otherwise.
bool is_assigned_in_block(char32_t block_start, char32_t cp);

// True iff `cp` is an assigned codepoint of lang's source block whose
// offset image in Devanagari is also assigned.
bool is_mappable(char32_t cp, Language lang);

struct TranslitReport {
  std::size_t mapped = 0;
  // Characters of the source block left unchanged.
  std::size_t passthrough = 0;
  std::set<char32_t> passthrough_codepoints;
};

struct TranslitResult {
  std::string text;
  TranslitReport report;
};

// Script unification by block offset: c -> U+0900 + (c - block_start).
// Output has the same number of codepoints as the input; everything outside
// the source block is copied byte for byte. For hi/mr the text is returned
// unchanged and every Devanagari character counts as passthrough; for en the
// text is unchanged with an empty report.
TranslitResult to_devanagari(std::string_view text, Language lang);

}  // namespace clfe
