#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clfe/align.h"
#include "clfe/record.h"

namespace clfe {

enum class PipelineMode { kTerc, kE2e };

std::string_view to_string(PipelineMode mode);
PipelineMode parse_pipeline_mode(std::string_view text);

// One run of either pipeline. The bilingual setting is a run with a
// single-language filter.
struct PipelineConfig {
  PipelineMode mode = PipelineMode::kE2e;
  std::set<Language> languages;  // empty: every language
  bool translit = false;         // e2e: unify Indic scripts to Devanagari
  double align_threshold = kDefaultAlignThreshold;
  std::string embeddings_path;   // terc: keep only gold-aligned candidates
  std::string model_path;        // terc: relation classifier
  std::string conllu_path;       // terc: annotations keyed by sent_id
  std::string translator_command;
  std::string generator_command;
  std::string annotator_command;
  std::uint64_t seed = 0;

  // Throws ValidationError when the mode lacks its adapter or a value is out
  // of range.
  void validate() const;
};

// Applies the keys present in a JSON config document on top of `base`.
PipelineConfig merge_config_json(PipelineConfig base, std::string_view json_text);
std::string config_to_json(const PipelineConfig& cfg);

struct StageRecord {
  std::string name;
  std::string status = "running";  // running | ok | failed
  std::vector<std::pair<std::string, std::int64_t>> counters;
  double millis = 0.0;

  void count(std::string_view key, std::int64_t delta = 1);
};

// Provenance of a run. Written for failed runs too, naming the stage that
// failed. Everything but the timings is reproducible.
class RunManifest {
 public:
  void set_config(const PipelineConfig& cfg) { config_json_ = config_to_json(cfg); }
  void set_input(std::string name, std::string sha256, std::size_t lines);
  void set_output(std::string name, std::string sha256, std::size_t lines);
  void fail(std::string_view error);

  StageRecord& begin_stage(std::string name);
  void end_stage(StageRecord& stage, bool ok,
                 std::chrono::steady_clock::time_point started);

  const std::vector<StageRecord>& stages() const { return stages_; }
  const std::string& status() const { return status_; }
  const std::string& failed_stage() const { return failed_stage_; }

  std::string to_json(bool with_timings = true) const;

 private:
  struct Digest {
    std::string name;
    std::string sha256;
    std::size_t lines;
  };

  std::string config_json_ = "{}";
  std::vector<Digest> inputs_;
  std::vector<Digest> outputs_;
  std::vector<StageRecord> stages_;
  std::string status_ = "ok";
  std::string failed_stage_;
  std::string error_;
};

struct PipelineResult {
  std::vector<std::pair<std::string, FactSet>> predictions;  // corpus order

  std::vector<std::string> lines() const;
};

// {"sample_id", "head", "facts": [{"relation", "tail"}]}
std::string prediction_line(const std::string& sample_id, const FactSet& facts);
// Reads prediction lines into sample_id -> FactSet. Duplicate ids and
// malformed lines are LineError.
std::map<std::string, FactSet> parse_predictions(std::string_view content);

// Both runners record each stage into `manifest` and rethrow failures after
// marking the stage failed.
PipelineResult run_terc(const std::vector<SampleRecord>& corpus,
                        const PipelineConfig& cfg, RunManifest& manifest);
PipelineResult run_e2e(const std::vector<SampleRecord>& corpus,
                       const PipelineConfig& cfg, RunManifest& manifest);
PipelineResult run_pipeline(const std::vector<SampleRecord>& corpus,
                            const PipelineConfig& cfg, RunManifest& manifest);

}  // namespace clfe
