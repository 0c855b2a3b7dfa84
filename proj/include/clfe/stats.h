#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "clfe/record.h"

namespace clfe {

// Corpus-level distribution figures over gold facts.
class DatasetStats {
 public:
  std::size_t record_count() const { return record_count_; }
  std::size_t total_facts() const { return total_facts_; }
  double avg_facts_per_sentence() const;

  const std::map<std::string, std::size_t>& relation_histogram() const {
    return relation_histogram_;
  }
  // Records per language.
  const std::map<Language, std::size_t>& language_histogram() const {
    return language_histogram_;
  }
  // Gold facts per language; sums to total_facts().
  const std::map<Language, std::size_t>& language_fact_counts() const {
    return language_fact_counts_;
  }

  // Relations by descending count, ties by name.
  const std::vector<std::pair<std::string, std::size_t>>& ranked_relations()
      const {
    return ranked_;
  }

  // Fraction of all facts covered by the k most frequent relations; 1 once
  // k reaches the number of distinct relations, 0 for k = 0 or no facts.
  double top_k_mass(std::size_t k) const;

 private:
  friend DatasetStats compute_stats(const std::vector<SampleRecord>& records);

  std::size_t record_count_ = 0;
  std::size_t total_facts_ = 0;
  std::map<std::string, std::size_t> relation_histogram_;
  std::map<Language, std::size_t> language_histogram_;
  std::map<Language, std::size_t> language_fact_counts_;
  std::vector<std::pair<std::string, std::size_t>> ranked_;
  std::vector<std::size_t> cumulative_;
};

// Throws ValidationError on an empty record list.
DatasetStats compute_stats(const std::vector<SampleRecord>& records);

// JSON object with histograms and the top-k masses for k in `ks`.
std::string stats_to_json(const DatasetStats& stats,
                          const std::vector<std::size_t>& ks);
// Aligned plain-text rendering of the same figures; `top_n` relations listed.
std::string render_stats_table(const DatasetStats& stats,
                               const std::vector<std::size_t>& ks,
                               std::size_t top_n);

}  // namespace clfe
