#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "clfe/record.h"

namespace clfe {

// One JSON Lines corpus row:
//   {"sample_id", "language", "sentence", "head",
//    "facts": [{"relation", "tail"}...], "split"}
// Text fields are NFC-normalized; fact order is preserved.
// Throws ValidationError (UnknownLanguageError for bad codes).
SampleRecord parse_sample(std::string_view line);

// Inverse of parse_sample; keys in the canonical order above.
std::string serialize_sample(const SampleRecord& record);

// Blank lines are skipped. A failing line surfaces as LineError carrying its
// 1-based line number; unreadable files as IoError.
std::vector<SampleRecord> load_corpus(const std::filesystem::path& path);
std::vector<SampleRecord> parse_corpus(std::string_view content);

}  // namespace clfe
