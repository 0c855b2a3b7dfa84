#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "clfe/embeddings.h"

namespace clfe {

struct SimilarityScore {
  double cosine_part = 0.0;  // [-1, 1]
  double iou_part = 0.0;     // [0, 1]
  double total = 0.0;        // cosine_part + iou_part
};

// Default acceptance threshold on SimilarityScore::total. At this setting
// the original tail alignment reported precision 0.54 and recall 0.77 on
// its corpus; those figures are reference points only.
inline constexpr double kDefaultAlignThreshold = 0.7;
inline constexpr double kReferenceAlignPrecision = 0.54;
inline constexpr double kReferenceAlignRecall = 0.77;

struct AlignmentConfig {
  double threshold = kDefaultAlignThreshold;  // within [-1, 2]
};

// Lexical + distributional similarity of two phrases. Terms come from the
// shared tokenizer; iou_part is term-set IoU and cosine_part the cosine of
// the mean in-vocabulary term vectors (0 if either side has none or a zero
// mean). Symmetric in its arguments.
SimilarityScore phrase_similarity(std::string_view a, std::string_view b,
                                  const EmbeddingStore& store);

struct AlignedPair {
  std::size_t candidate = 0;
  std::size_t gold = 0;
  SimilarityScore score;
};

struct AlignmentResult {
  std::vector<AlignedPair> pairs;  // in acceptance order
  std::vector<std::size_t> unmatched_candidates;
  std::vector<std::size_t> unmatched_gold;
};

// Greedy one-to-one assignment over a candidates x gold matrix of totals:
// pairs sorted by score descending, ties by (candidate, gold) ascending;
// a pair is accepted when it reaches `threshold` and both ends are free.
// Only the `total` field of the result scores is set.
AlignmentResult align_scores(const std::vector<std::vector<double>>& totals,
                             std::size_t gold_count, double threshold);

// Scores every candidate/gold pair with phrase_similarity, then aligns.
// Throws ValidationError when the threshold lies outside [-1, 2].
AlignmentResult align(const std::vector<std::string>& candidates,
                      const std::vector<std::string>& gold,
                      const EmbeddingStore& store, const AlignmentConfig& cfg);

}  // namespace clfe
