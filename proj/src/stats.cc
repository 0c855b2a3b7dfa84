#include "clfe/stats.h"

#include <algorithm>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "clfe/errors.h"

namespace clfe {

double DatasetStats::avg_facts_per_sentence() const {
  if (record_count_ == 0) return 0.0;
  return static_cast<double>(total_facts_) / static_cast<double>(record_count_);
}

double DatasetStats::top_k_mass(std::size_t k) const {
  if (total_facts_ == 0 || k == 0) return 0.0;
  k = std::min(k, cumulative_.size());
  return static_cast<double>(cumulative_[k - 1]) /
         static_cast<double>(total_facts_);
}

DatasetStats compute_stats(const std::vector<SampleRecord>& records) {
  if (records.empty()) throw ValidationError("no records to summarize");
  DatasetStats stats;
  stats.record_count_ = records.size();
  for (const SampleRecord& record : records) {
    ++stats.language_histogram_[record.language];
    stats.language_fact_counts_[record.language] += record.gold.facts.size();
    stats.total_facts_ += record.gold.facts.size();
    for (const Fact& fact : record.gold.facts) {
      ++stats.relation_histogram_[fact.relation];
    }
  }
  stats.ranked_.assign(stats.relation_histogram_.begin(),
                       stats.relation_histogram_.end());
  std::stable_sort(stats.ranked_.begin(), stats.ranked_.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::size_t running = 0;
  for (const auto& [relation, count] : stats.ranked_) {
    running += count;
    stats.cumulative_.push_back(running);
  }
  return stats;
}

std::string stats_to_json(const DatasetStats& stats,
                          const std::vector<std::size_t>& ks) {
  nlohmann::ordered_json out;
  out["records"] = stats.record_count();
  out["total_facts"] = stats.total_facts();
  out["distinct_relations"] = stats.relation_histogram().size();
  out["avg_facts_per_sentence"] = stats.avg_facts_per_sentence();
  nlohmann::ordered_json languages = nlohmann::ordered_json::object();
  for (Language lang : kAllLanguages) {
    auto it = stats.language_histogram().find(lang);
    if (it == stats.language_histogram().end()) continue;
    languages[std::string(to_string(lang))] = {
        {"records", it->second},
        {"facts", stats.language_fact_counts().at(lang)}};
  }
  out["languages"] = std::move(languages);
  nlohmann::ordered_json mass = nlohmann::ordered_json::object();
  for (std::size_t k : ks) mass[std::to_string(k)] = stats.top_k_mass(k);
  out["top_k_mass"] = std::move(mass);
  nlohmann::ordered_json relations = nlohmann::ordered_json::array();
  for (const auto& [relation, count] : stats.ranked_relations()) {
    relations.push_back({{"relation", relation}, {"count", count}});
  }
  out["relations"] = std::move(relations);
  return out.dump(2);
}

std::string render_stats_table(const DatasetStats& stats,
                               const std::vector<std::size_t>& ks,
                               std::size_t top_n) {
  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-26s %10zu\n", "records", stats.record_count());
  out << buf;
  std::snprintf(buf, sizeof buf, "%-26s %10zu\n", "facts", stats.total_facts());
  out << buf;
  std::snprintf(buf, sizeof buf, "%-26s %10zu\n", "distinct relations",
                stats.relation_histogram().size());
  out << buf;
  std::snprintf(buf, sizeof buf, "%-26s %10.4f\n", "avg facts per sentence",
                stats.avg_facts_per_sentence());
  out << buf;
  for (std::size_t k : ks) {
    std::string label = "top-" + std::to_string(k) + " relation mass";
    std::snprintf(buf, sizeof buf, "%-26s %10.4f\n", label.c_str(),
                  stats.top_k_mass(k));
    out << buf;
  }
  out << "\n";
  std::snprintf(buf, sizeof buf, "%-8s %10s %10s\n", "language", "records", "facts");
  out << buf;
  for (Language lang : kAllLanguages) {
    auto it = stats.language_histogram().find(lang);
    if (it == stats.language_histogram().end()) continue;
    std::snprintf(buf, sizeof buf, "%-8s %10zu %10zu\n",
                  std::string(to_string(lang)).c_str(), it->second,
                  stats.language_fact_counts().at(lang));
    out << buf;
  }
  out << "\n";
  std::size_t width = 8;
  std::size_t shown = std::min(top_n, stats.ranked_relations().size());
  for (std::size_t i = 0; i < shown; ++i) {
    width = std::max(width, stats.ranked_relations()[i].first.size());
  }
  std::snprintf(buf, sizeof buf, "%-*s %10s %8s\n", static_cast<int>(width),
                "relation", "count", "share");
  out << buf;
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& [relation, count] = stats.ranked_relations()[i];
    out << relation << std::string(width - relation.size(), ' ');
    std::snprintf(buf, sizeof buf, " %10zu %8.4f\n", count,
                  static_cast<double>(count) /
                      static_cast<double>(stats.total_facts()));
    out << buf;
  }
  return out.str();
}

}  // namespace clfe
