#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "clfe/conllu.h"
#include "clfe/dates.h"

namespace clfe {

struct NounChunk {
  int first = 0;  // 1-based token range, inclusive
  int last = 0;
  int root_index = 0;
};

// Base noun phrases: each NOUN/PROPN/PRON token not already inside a chunk
// roots a span reaching back over its left dependents (transitively) with
// relations det, amod, compound, nummod, poss, flat (subtypes allowed, plus
// nmod:poss). Roots are visited right to left so a phrase's modifiers never
// become roots of their own. Returned in left-to-right order.
std::vector<NounChunk> noun_chunks(const AnnotatedSentence& sentence);

enum class CandidateKind { kChunk, kPropnSpan, kRootNoun, kDate };

std::string_view to_string(CandidateKind kind);

struct TailCandidate {
  std::string text;
  CandidateKind kind = CandidateKind::kChunk;
  // Token range (1-based, inclusive) for token kinds; byte range
  // [begin, end) of the unmasked text for dates.
  int begin = 0;
  int end = 0;

  bool operator==(const TailCandidate&) const = default;
};

// Minimum term-set IoU with the head at which a chunk counts as the head.
inline constexpr double kHeadOverlapIoU = 0.5;

// True when `text` is lexically the head: its term set is a subset of the
// head's, or their IoU reaches kHeadOverlapIoU.
bool overlaps_head(std::string_view text, std::string_view head);

// Tail selection on an annotated, date-masked English sentence:
//   1. drop chunks overlapping the head;
//   2. drop chunks rooted in a pronoun;
//   3. every maximal ADJ/PROPN run holding a PROPN becomes a propn_span;
//   4. each surviving NOUN-rooted chunk yields its root as a root_noun;
// surviving chunks themselves follow, then one date candidate per mention
// (text = ISO value). Head overlap is applied to every kind, date dummies
// never seed token candidates, and duplicates (lowercase text) keep the
// first entry in the order propn_span, root_noun, chunk, date.
std::vector<TailCandidate> select_tail_candidates(
    const AnnotatedSentence& sentence, std::string_view head,
    const std::vector<DateMention>& dates);

}  // namespace clfe
