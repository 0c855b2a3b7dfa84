#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace clfe {

// The eight corpus languages. Enumerator order follows the column order of
// the published results table, which is also the report column order.
enum class Language { kTe, kBn, kTa, kGu, kMr, kEn, kHi, kKn };

inline constexpr std::array<Language, 8> kAllLanguages = {
    Language::kTe, Language::kBn, Language::kTa, Language::kGu,
    Language::kMr, Language::kEn, Language::kHi, Language::kKn};

std::string_view to_string(Language lang);

// Throws UnknownLanguageError for anything but the eight lowercase codes.
Language parse_language(std::string_view code);
std::optional<Language> try_parse_language(std::string_view code);

}  // namespace clfe
