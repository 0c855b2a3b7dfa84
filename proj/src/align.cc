#include "clfe/align.h"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "clfe/errors.h"
#include "clfe/text.h"

namespace clfe {

namespace {

// Mean of the in-vocabulary term vectors; empty when none are known.
std::vector<double> mean_vector(const std::vector<std::string>& terms,
                                const EmbeddingStore& store) {
  std::vector<double> sum;
  std::size_t found = 0;
  for (const std::string& t : terms) {
    auto v = store.find(t);
    if (!v) continue;
    if (sum.empty()) sum.assign(v->size(), 0.0);
    for (std::size_t i = 0; i < v->size(); ++i) sum[i] += (*v)[i];
    ++found;
  }
  for (double& x : sum) x /= static_cast<double>(found);
  return sum;
}

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) return 0.0;
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

}  // namespace

SimilarityScore phrase_similarity(std::string_view a, std::string_view b,
                                  const EmbeddingStore& store) {
  const auto terms_a = terms(a);
  const auto terms_b = terms(b);
  SimilarityScore score;
  score.iou_part = jaccard({terms_a.begin(), terms_a.end()},
                           {terms_b.begin(), terms_b.end()});
  score.cosine_part = cosine(mean_vector(terms_a, store), mean_vector(terms_b, store));
  score.total = score.cosine_part + score.iou_part;
  return score;
}

AlignmentResult align_scores(const std::vector<std::vector<double>>& totals,
                             std::size_t gold_count, double threshold) {
  struct Entry {
    double total;
    std::size_t candidate;
    std::size_t gold;
  };
  std::vector<Entry> entries;
  for (std::size_t c = 0; c < totals.size(); ++c) {
    for (std::size_t g = 0; g < gold_count; ++g) {
      entries.push_back({totals[c].at(g), c, g});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.total != y.total) return x.total > y.total;
    return std::tie(x.candidate, x.gold) < std::tie(y.candidate, y.gold);
  });

  AlignmentResult result;
  std::vector<bool> candidate_used(totals.size(), false);
  std::vector<bool> gold_used(gold_count, false);
  for (const Entry& e : entries) {
    if (e.total < threshold) break;
    if (candidate_used[e.candidate] || gold_used[e.gold]) continue;
    candidate_used[e.candidate] = true;
    gold_used[e.gold] = true;
    AlignedPair pair{e.candidate, e.gold, {}};
    pair.score.total = e.total;
    result.pairs.push_back(pair);
  }
  for (std::size_t c = 0; c < totals.size(); ++c) {
    if (!candidate_used[c]) result.unmatched_candidates.push_back(c);
  }
  for (std::size_t g = 0; g < gold_count; ++g) {
    if (!gold_used[g]) result.unmatched_gold.push_back(g);
  }
  return result;
}

AlignmentResult align(const std::vector<std::string>& candidates,
                      const std::vector<std::string>& gold,
                      const EmbeddingStore& store, const AlignmentConfig& cfg) {
  if (!(cfg.threshold >= -1.0 && cfg.threshold <= 2.0)) {
    throw ValidationError("alignment threshold must lie in [-1, 2]");
  }
  std::vector<std::vector<SimilarityScore>> scores(candidates.size());
  std::vector<std::vector<double>> totals(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    for (const std::string& g : gold) {
      scores[c].push_back(phrase_similarity(candidates[c], g, store));
      totals[c].push_back(scores[c].back().total);
    }
  }
  AlignmentResult result = align_scores(totals, gold.size(), cfg.threshold);
  for (AlignedPair& pair : result.pairs) {
    pair.score = scores[pair.candidate][pair.gold];
  }
  return result;
}

}  // namespace clfe
