#include "clfe/translit.h"

#include <array>
#include <cstdint>

#include "clfe/text.h"

namespace clfe {

namespace {

struct AssignedBlock {
  ScriptBlock block;
  // Bit i set when block_start + i is assigned (Unicode 13.0 UCD, general
  // category != Cn). Word 0 covers offsets 0-63, word 1 offsets 64-127.
  std::array<std::uint64_t, 2> bits;
};

constexpr std::array<AssignedBlock, 6> kBlocks = {{
    {{"Devanagari", 0x0900}, {0xFFFFFFFFFFFFFFFFULL, 0xFFFFFFFFFFFFFFFFULL}},
    {{"Bengali", 0x0980}, {0xF3C5FDFFFFF99FEFULL, 0x7FFFFFCFB080799FULL}},
    {{"Gujarati", 0x0A80}, {0xF3EDFDFFFFFBBFEEULL, 0xFE03FFCF00013BBFULL}},
    {{"Tamil", 0x0B80}, {0xC3FFC718D63DC7ECULL, 0x07FFFFC000813DC7ULL}},
    {{"Telugu", 0x0C00}, {0xE3FFFDFFFFFDDFFFULL, 0xFF80FFCF07603DDFULL}},
    {{"Kannada", 0x0C80}, {0xF3EFFDFFFFFDDFFFULL, 0x0006FFCF40603DDFULL}},
}};

const AssignedBlock* find_block(char32_t block_start) {
  for (const AssignedBlock& b : kBlocks) {
    if (b.block.block_start == block_start) return &b;
  }
  return nullptr;
}

}  // namespace

std::optional<ScriptBlock> source_block(Language lang) {
  switch (lang) {
    case Language::kBn: return kBlocks[1].block;
    case Language::kGu: return kBlocks[2].block;
    case Language::kTa: return kBlocks[3].block;
    case Language::kTe: return kBlocks[4].block;
    case Language::kKn: return kBlocks[5].block;
    case Language::kHi:
    case Language::kMr:
    case Language::kEn:
      return std::nullopt;
  }
  return std::nullopt;
}

bool is_assigned_in_block(char32_t block_start, char32_t cp) {
  const AssignedBlock* b = find_block(block_start);
  if (b == nullptr || !b->block.contains(cp)) return false;
  char32_t offset = cp - block_start;
  return (b->bits[offset / 64] >> (offset % 64)) & 1U;
}

bool is_mappable(char32_t cp, Language lang) {
  auto block = source_block(lang);
  if (!block || !block->contains(cp)) return false;
  char32_t target = kDevanagariStart + (cp - block->block_start);
  return is_assigned_in_block(block->block_start, cp) &&
         is_assigned_in_block(kDevanagariStart, target);
}

TranslitResult to_devanagari(std::string_view text, Language lang) {
  TranslitResult result;
  if (lang == Language::kHi || lang == Language::kMr) {
    result.text = std::string(text);
    const ScriptBlock devanagari = kBlocks[0].block;
    for (const utf8::Unit& unit : utf8::decode(text)) {
      if (unit.valid && devanagari.contains(unit.codepoint)) {
        ++result.report.passthrough;
        result.report.passthrough_codepoints.insert(unit.codepoint);
      }
    }
    return result;
  }
  auto block = source_block(lang);
  if (!block) {
    result.text = std::string(text);
    return result;
  }
  result.text.reserve(text.size());
  for (const utf8::Unit& unit : utf8::decode(text)) {
    if (!unit.valid || !block->contains(unit.codepoint)) {
      result.text.append(text.substr(unit.offset, unit.length));
      continue;
    }
    if (is_mappable(unit.codepoint, lang)) {
      utf8::append(result.text,
                   kDevanagariStart + (unit.codepoint - block->block_start));
      ++result.report.mapped;
    } else {
      result.text.append(text.substr(unit.offset, unit.length));
      ++result.report.passthrough;
      result.report.passthrough_codepoints.insert(unit.codepoint);
    }
  }
  return result;
}

}  // namespace clfe
