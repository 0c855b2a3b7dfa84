#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "clfe/record.h"

namespace clfe {

// Lowercased terms of a tail with punctuation (hyphens included) removed.
std::set<std::string> normalize_tail(std::string_view text);

struct MatchDecision {
  std::size_t pred_index = 0;
  std::size_t gold_index = 0;
  bool relation_match = false;
  std::set<std::string> tail_overlap_tokens;
};

// Maximum-cardinality bipartite matching on eligibility[pred][gold] by
// augmenting paths, trying predictions and golds in ascending order.
// Returns (pred, gold) pairs sorted by pred.
std::vector<std::pair<std::size_t, std::size_t>> maximum_matching(
    const std::vector<std::vector<bool>>& eligibility, std::size_t gold_count);

// Strict matching: a pair is eligible when the relations are equal
// (case-sensitive) and the normalized tails share at least one term.
std::vector<MatchDecision> match_facts(const FactSet& pred, const FactSet& gold);

struct Counts {
  std::size_t matched = 0;
  std::size_t predicted = 0;
  std::size_t gold = 0;

  double precision() const;
  double recall() const;
  double f1() const;
};

// Harmonic mean, 0 when p + r == 0.
double f1_score(double precision, double recall);

struct EvalReport {
  std::map<Language, Counts> per_language;
  Counts overall;
};

// Micro counts per language over `records`; samples without a prediction
// contribute only gold facts. Throws ValidationError for a prediction whose
// sample_id is not in `records`.
EvalReport score_corpus(const std::map<std::string, FactSet>& predictions,
                        const std::vector<SampleRecord>& records);

// Fixed-width table: one column per language present (results-table order)
// plus "All"; rows P, R, F1 in percent and the raw counts.
std::string render_report_text(const EvalReport& report);
std::string report_to_json(const EvalReport& report);
EvalReport report_from_json(std::string_view text);

}  // namespace clfe
