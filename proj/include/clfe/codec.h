#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "clfe/record.h"

namespace clfe {

// Target-side text for the generator: "<R> r1 <T> t1 <R> r2 <T> t2 ...",
// single spaces around markers. The head is not part of the target; the
// model receives it as input. An empty fact list gives "".
// Throws ValidationError when a payload is empty or contains a marker.
std::string serialize_facts(const FactSet& facts);

struct ParseReport {
  std::vector<Fact> facts;
  // <R>-fragments that did not yield a fact.
  std::size_t dropped_fragments = 0;
  std::vector<std::string> warnings;
};

// Lenient inverse of serialize_facts for arbitrary model output. Never
// throws. Each "<R> ... <T> ..." fragment runs to the next "<R>" or the end
// of the text. A fragment needs exactly one "<T>" with text on both sides;
// any other fragment is dropped and counted. Text before the first "<R>" only warns.
ParseReport parse_linearized(std::string_view text);

}  // namespace clfe
