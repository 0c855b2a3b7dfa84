#include "clfe/evalkit.h"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <iterator>
#include <json.hpp>

#include "clfe/errors.h"
#include "clfe/text.h"

namespace clfe {

std::set<std::string> normalize_tail(std::string_view text) {
  return term_set(text);
}

std::vector<std::pair<std::size_t, std::size_t>> maximum_matching(
    const std::vector<std::vector<bool>>& eligibility, std::size_t gold_count) {
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> gold_owner(gold_count, kFree);

  std::vector<bool> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t p) {
    for (std::size_t g = 0; g < gold_count; ++g) {
      if (!eligibility[p][g] || visited[g]) continue;
      visited[g] = true;
      if (gold_owner[g] == kFree || augment(gold_owner[g])) {
        gold_owner[g] = p;
        return true;
      }
    }
    return false;
  };
  for (std::size_t p = 0; p < eligibility.size(); ++p) {
    visited.assign(gold_count, false);
    augment(p);
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t g = 0; g < gold_count; ++g) {
    if (gold_owner[g] != kFree) pairs.emplace_back(gold_owner[g], g);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<MatchDecision> match_facts(const FactSet& pred, const FactSet& gold) {
  std::vector<std::set<std::string>> gold_terms;
  for (const Fact& f : gold.facts) gold_terms.push_back(normalize_tail(f.tail));

  std::vector<std::vector<bool>> eligible(pred.facts.size(),
                                          std::vector<bool>(gold.facts.size()));
  std::vector<std::vector<std::set<std::string>>> overlap(
      pred.facts.size(), std::vector<std::set<std::string>>(gold.facts.size()));
  for (std::size_t p = 0; p < pred.facts.size(); ++p) {
    const auto pred_terms = normalize_tail(pred.facts[p].tail);
    for (std::size_t g = 0; g < gold.facts.size(); ++g) {
      if (pred.facts[p].relation != gold.facts[g].relation) continue;
      std::set_intersection(pred_terms.begin(), pred_terms.end(),
                            gold_terms[g].begin(), gold_terms[g].end(),
                            std::inserter(overlap[p][g], overlap[p][g].end()));
      eligible[p][g] = !overlap[p][g].empty();
    }
  }
  std::vector<MatchDecision> out;
  for (const auto& [p, g] : maximum_matching(eligible, gold.facts.size())) {
    out.push_back({p, g, true, std::move(overlap[p][g])});
  }
  return out;
}

double Counts::precision() const {
  return predicted == 0 ? 0.0
                        : static_cast<double>(matched) / static_cast<double>(predicted);
}

double Counts::recall() const {
  return gold == 0 ? 0.0 : static_cast<double>(matched) / static_cast<double>(gold);
}

double Counts::f1() const { return f1_score(precision(), recall()); }

double f1_score(double precision, double recall) {
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

EvalReport score_corpus(const std::map<std::string, FactSet>& predictions,
                        const std::vector<SampleRecord>& records) {
  std::map<std::string, const SampleRecord*> by_id;
  for (const SampleRecord& r : records) by_id[r.sample_id] = &r;
  for (const auto& [id, facts] : predictions) {
    if (by_id.count(id) == 0) {
      throw ValidationError("prediction for unknown sample_id '" + id + "'");
    }
  }
  EvalReport report;
  for (const SampleRecord& r : records) {
    Counts& lang = report.per_language[r.language];
    lang.gold += r.gold.facts.size();
    auto it = predictions.find(r.sample_id);
    if (it == predictions.end()) continue;
    lang.predicted += it->second.facts.size();
    lang.matched += match_facts(it->second, r.gold).size();
  }
  for (const auto& [lang, c] : report.per_language) {
    report.overall.matched += c.matched;
    report.overall.predicted += c.predicted;
    report.overall.gold += c.gold;
  }
  return report;
}

std::string render_report_text(const EvalReport& report) {
  std::vector<std::string> headers;
  std::vector<const Counts*> columns;
  for (Language lang : kAllLanguages) {
    auto it = report.per_language.find(lang);
    if (it == report.per_language.end()) continue;
    headers.emplace_back(to_string(lang));
    columns.push_back(&it->second);
  }
  headers.emplace_back("All");
  columns.push_back(&report.overall);

  std::string out;
  char buf[64];
  auto row = [&](const char* label, auto cell) {
    std::snprintf(buf, sizeof buf, "%-10s", label);
    out += buf;
    for (const Counts* c : columns) out += cell(*c);
    out += '\n';
  };
  auto pct = [&](double v) {
    std::snprintf(buf, sizeof buf, " %9.2f", 100.0 * v);
    return std::string(buf);
  };
  auto count = [&](std::size_t v) {
    std::snprintf(buf, sizeof buf, " %9zu", v);
    return std::string(buf);
  };
  std::snprintf(buf, sizeof buf, "%-10s", "");
  out += buf;
  for (const std::string& h : headers) {
    std::snprintf(buf, sizeof buf, " %9s", h.c_str());
    out += buf;
  }
  out += '\n';
  row("P", [&](const Counts& c) { return pct(c.precision()); });
  row("R", [&](const Counts& c) { return pct(c.recall()); });
  row("F1", [&](const Counts& c) { return pct(c.f1()); });
  row("matched", [&](const Counts& c) { return count(c.matched); });
  row("predicted", [&](const Counts& c) { return count(c.predicted); });
  row("gold", [&](const Counts& c) { return count(c.gold); });
  return out;
}

namespace {

nlohmann::ordered_json counts_json(const Counts& c) {
  nlohmann::ordered_json j;
  j["precision"] = c.precision();
  j["recall"] = c.recall();
  j["f1"] = c.f1();
  j["matched"] = c.matched;
  j["predicted"] = c.predicted;
  j["gold"] = c.gold;
  return j;
}

Counts counts_from_json(const nlohmann::json& j) {
  Counts c;
  c.matched = j.at("matched").get<std::size_t>();
  c.predicted = j.at("predicted").get<std::size_t>();
  c.gold = j.at("gold").get<std::size_t>();
  if (c.matched > c.predicted || c.matched > c.gold) {
    throw ValidationError("report: matched exceeds predicted or gold");
  }
  return c;
}

}  // namespace

std::string report_to_json(const EvalReport& report) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json langs = nlohmann::ordered_json::object();
  for (Language lang : kAllLanguages) {
    auto it = report.per_language.find(lang);
    if (it != report.per_language.end()) {
      langs[std::string(to_string(lang))] = counts_json(it->second);
    }
  }
  doc["per_language"] = std::move(langs);
  doc["overall"] = counts_json(report.overall);
  return doc.dump(2);
}

EvalReport report_from_json(std::string_view text) {
  try {
    auto doc = nlohmann::json::parse(text);
    EvalReport report;
    for (const auto& [code, counts] : doc.at("per_language").items()) {
      report.per_language[parse_language(code)] = counts_from_json(counts);
    }
    report.overall = counts_from_json(doc.at("overall"));
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("report: ") + e.what());
  }
}

}  // namespace clfe
