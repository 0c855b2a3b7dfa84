#include "clfe/language.h"

#include <string>

#include "clfe/errors.h"

namespace clfe {

std::string_view to_string(Language lang) {
  switch (lang) {
    case Language::kTe: return "te";
    case Language::kBn: return "bn";
    case Language::kTa: return "ta";
    case Language::kGu: return "gu";
    case Language::kMr: return "mr";
    case Language::kEn: return "en";
    case Language::kHi: return "hi";
    case Language::kKn: return "kn";
  }
  return "??";
}

std::optional<Language> try_parse_language(std::string_view code) {
  for (Language lang : kAllLanguages) {
    if (to_string(lang) == code) return lang;
  }
  return std::nullopt;
}

Language parse_language(std::string_view code) {
  if (auto lang = try_parse_language(code)) return *lang;
  throw UnknownLanguageError(std::string(code));
}

}  // namespace clfe
