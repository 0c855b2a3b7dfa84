#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace clfe {

struct DateMention {
  std::size_t begin = 0;  // byte range [begin, end) in the unmasked text
  std::size_t end = 0;
  std::string surface;
  std::string iso;    // "YYYY", "YYYY-MM" or "YYYY-MM-DD"
  std::string dummy;  // "__DATE_k__", k = 0-based mention ordinal
};

struct DateExtraction {
  std::string masked;
  std::vector<DateMention> mentions;
};

std::string date_dummy(std::size_t ordinal);

// Finds dates in English text and replaces each with its dummy token.
// Recognized forms: "D Month YYYY", "Month D, YYYY", "Month YYYY",
// "YYYY-MM-DD", "D/M/YYYY" and a bare year 1000-2999. Month names are
// Title-case full names or three-letter abbreviations ("Sept" too, optional
// trailing period); days may carry st/nd/rd/th. A match must start and end
// on word boundaries and name a real calendar date. Scanning goes left to
// right and the longest match at a position wins.
DateExtraction extract_dates(std::string_view raw);

// Replaces dummy tokens with their original surfaces; inverse of masking.
std::string unmask_dates(std::string_view masked,
                         const std::vector<DateMention>& mentions);

}  // namespace clfe
