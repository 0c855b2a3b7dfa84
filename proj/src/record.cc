#include "clfe/record.h"

#include <string>

#include "clfe/errors.h"
#include "clfe/text.h"

namespace clfe {

bool contains_marker(std::string_view text) {
  return text.find(kRelationMarker) != std::string_view::npos ||
         text.find(kTailMarker) != std::string_view::npos;
}

Fact make_fact(std::string_view relation, std::string_view tail) {
  relation = trim(relation);
  tail = trim(tail);
  if (relation.empty()) throw ValidationError("fact has an empty relation");
  if (tail.empty()) throw ValidationError("fact has an empty tail");
  if (contains_marker(relation) || contains_marker(tail)) {
    throw ValidationError("fact contains a marker substring: '" +
                          std::string(relation) + "' / '" + std::string(tail) +
                          "'");
  }
  return Fact{std::string(relation), std::string(tail)};
}

std::string_view to_string(Split split) {
  return split == Split::kTrain ? "train" : "test";
}

Split parse_split(std::string_view text) {
  if (text == "train") return Split::kTrain;
  if (text == "test") return Split::kTest;
  throw ValidationError("unknown split '" + std::string(text) + "'");
}

}  // namespace clfe
