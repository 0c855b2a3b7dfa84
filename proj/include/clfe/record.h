#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "clfe/language.h"

namespace clfe {

inline constexpr std::string_view kRelationMarker = "<R>";
inline constexpr std::string_view kTailMarker = "<T>";

// One (relation, tail) pair under an implicit head entity.
struct Fact {
  std::string relation;
  std::string tail;

  bool operator==(const Fact&) const = default;
};

// Trims both sides and rejects empty payloads or payloads containing a
// linearization marker. Throws ValidationError.
Fact make_fact(std::string_view relation, std::string_view tail);

// True when `text` contains "<R>" or "<T>".
bool contains_marker(std::string_view text);

struct FactSet {
  std::string head;
  std::vector<Fact> facts;

  bool operator==(const FactSet&) const = default;
};

enum class Split { kTrain, kTest };

std::string_view to_string(Split split);
Split parse_split(std::string_view text);

struct SampleRecord {
  std::string sample_id;
  Language language = Language::kEn;
  std::string sentence;
  std::string head;
  FactSet gold;
  Split split = Split::kTrain;

  bool operator==(const SampleRecord&) const = default;
};

}  // namespace clfe
