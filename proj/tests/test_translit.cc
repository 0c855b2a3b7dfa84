#include <doctest.h>

#include "clfe/text.h"
#include "clfe/translit.h"

using namespace clfe;

TEST_CASE("source blocks") {
  CHECK(source_block(Language::kBn)->block_start == 0x0980);
  CHECK(source_block(Language::kGu)->block_start == 0x0A80);
  CHECK(source_block(Language::kTa)->block_start == 0x0B80);
  CHECK(source_block(Language::kTe)->block_start == 0x0C00);
  CHECK(source_block(Language::kKn)->block_start == 0x0C80);
  CHECK_FALSE(source_block(Language::kHi).has_value());
  CHECK_FALSE(source_block(Language::kMr).has_value());
  CHECK_FALSE(source_block(Language::kEn).has_value());
}

TEST_CASE("Bengali maps by fixed block offset") {
  auto r = to_devanagari("বাংলা", Language::kBn);
  CHECK(r.text == "बांला");
  CHECK(r.report.mapped == 5);
  CHECK(r.report.passthrough == 0);
  CHECK(to_devanagari("ক", Language::kBn).text == "क");
  CHECK(to_devanagari("রবীন্দ্রনাথ 42!", Language::kBn).text == "रबीन्द्रनाथ 42!");
}

TEST_CASE("unassigned source codepoints pass through") {
  CHECK_FALSE(is_assigned_in_block(0x0B80, 0x0B80));
  CHECK_FALSE(is_mappable(0x0B80, Language::kTa));
  std::string text;
  utf8::append(text, 0x0B80);
  utf8::append(text, 0x0B95);
  auto r = to_devanagari(text, Language::kTa);
  std::string expected;
  utf8::append(expected, 0x0B80);
  utf8::append(expected, 0x0915);
  CHECK(r.text == expected);
  CHECK(r.report.mapped == 1);
  CHECK(r.report.passthrough == 1);
  CHECK(r.report.passthrough_codepoints.count(0x0B80) == 1);
  CHECK_FALSE(is_mappable(0x0984, Language::kBn));
}

TEST_CASE("Devanagari and Latin inputs are identity") {
  const std::string hi = "नरेंद्र मोदी";
  CHECK(to_devanagari(hi, Language::kHi).text == hi);
  CHECK(to_devanagari(hi, Language::kMr).text == hi);
  CHECK(to_devanagari("Narendra Modi", Language::kEn).text == "Narendra Modi");
  CHECK(to_devanagari("Narendra Modi", Language::kEn).report.mapped == 0);
  // Text in another language's script is left alone.
  CHECK(to_devanagari("বাংলা", Language::kTa).text == "বাংলা");
}
