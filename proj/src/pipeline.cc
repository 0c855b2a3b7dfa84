#include "clfe/pipeline.h"

#include <json.hpp>

#include "clfe/adapter.h"
#include "clfe/chunker.h"
#include "clfe/codec.h"
#include "clfe/conllu.h"
#include "clfe/corpus.h"
#include "clfe/dates.h"
#include "clfe/embeddings.h"
#include "clfe/errors.h"
#include "clfe/jsonl.h"
#include "clfe/relclf.h"
#include "clfe/text.h"
#include "clfe/translit.h"

namespace clfe {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view to_string(PipelineMode mode) {
  return mode == PipelineMode::kTerc ? "terc" : "e2e";
}

PipelineMode parse_pipeline_mode(std::string_view text) {
  if (text == "terc") return PipelineMode::kTerc;
  if (text == "e2e") return PipelineMode::kE2e;
  throw ValidationError("unknown pipeline mode '" + std::string(text) + "'");
}

void PipelineConfig::validate() const {
  if (mode == PipelineMode::kTerc && translator_command.empty()) {
    throw ValidationError("terc mode requires a translator adapter");
  }
  if (mode == PipelineMode::kE2e && generator_command.empty()) {
    throw ValidationError("e2e mode requires a generator adapter");
  }
  if (mode == PipelineMode::kTerc && model_path.empty()) {
    throw ValidationError("terc mode requires a classifier model");
  }
  if (mode == PipelineMode::kTerc && conllu_path.empty() &&
      annotator_command.empty()) {
    throw ValidationError("terc mode requires CoNLL-U annotations or an annotator adapter");
  }
  if (!(align_threshold >= -1.0 && align_threshold <= 2.0)) {
    throw ValidationError("align threshold must lie in [-1, 2]");
  }
}

PipelineConfig merge_config_json(PipelineConfig cfg, std::string_view json_text) {
  try {
    json doc = json::parse(json_text);
    if (!doc.is_object()) throw ValidationError("config must be a JSON object");
    if (doc.contains("mode")) cfg.mode = parse_pipeline_mode(doc["mode"].get<std::string>());
    if (doc.contains("languages")) {
      cfg.languages.clear();
      for (const auto& code : doc["languages"]) {
        cfg.languages.insert(parse_language(code.get<std::string>()));
      }
    }
    if (doc.contains("translit")) cfg.translit = doc["translit"].get<bool>();
    if (doc.contains("align_threshold")) {
      cfg.align_threshold = doc["align_threshold"].get<double>();
    }
    if (doc.contains("embeddings")) cfg.embeddings_path = doc["embeddings"].get<std::string>();
    if (doc.contains("model")) cfg.model_path = doc["model"].get<std::string>();
    if (doc.contains("conllu")) cfg.conllu_path = doc["conllu"].get<std::string>();
    if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("adapters")) {
      const json& adapters = doc["adapters"];
      if (adapters.contains("translator")) {
        cfg.translator_command = adapters["translator"].get<std::string>();
      }
      if (adapters.contains("generator")) {
        cfg.generator_command = adapters["generator"].get<std::string>();
      }
      if (adapters.contains("annotator")) {
        cfg.annotator_command = adapters["annotator"].get<std::string>();
      }
    }
    return cfg;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
}

std::string config_to_json(const PipelineConfig& cfg) {
  ordered_json doc;
  doc["mode"] = to_string(cfg.mode);
  ordered_json langs = ordered_json::array();
  for (Language lang : kAllLanguages) {
    if (cfg.languages.count(lang) != 0) langs.push_back(to_string(lang));
  }
  doc["languages"] = std::move(langs);
  doc["translit"] = cfg.translit;
  doc["align_threshold"] = cfg.align_threshold;
  doc["embeddings"] = cfg.embeddings_path;
  doc["model"] = cfg.model_path;
  doc["conllu"] = cfg.conllu_path;
  doc["seed"] = cfg.seed;
  doc["adapters"] = {{"translator", cfg.translator_command},
                     {"generator", cfg.generator_command},
                     {"annotator", cfg.annotator_command}};
  return doc.dump();
}

void StageRecord::count(std::string_view key, std::int64_t delta) {
  for (auto& [name, value] : counters) {
    if (name == key) {
      value += delta;
      return;
    }
  }
  counters.emplace_back(std::string(key), delta);
}

void RunManifest::set_input(std::string name, std::string sha256, std::size_t lines) {
  inputs_.push_back({std::move(name), std::move(sha256), lines});
}

void RunManifest::set_output(std::string name, std::string sha256, std::size_t lines) {
  outputs_.push_back({std::move(name), std::move(sha256), lines});
}

void RunManifest::fail(std::string_view error) {
  status_ = "failed";
  error_ = std::string(error);
  for (const StageRecord& s : stages_) {
    if (s.status != "ok" && failed_stage_.empty()) failed_stage_ = s.name;
  }
  if (failed_stage_.empty()) failed_stage_ = "setup";
}

StageRecord& RunManifest::begin_stage(std::string name) {
  stages_.push_back(StageRecord{std::move(name), "running", {}, 0.0});
  return stages_.back();
}

void RunManifest::end_stage(StageRecord& stage, bool ok,
                            std::chrono::steady_clock::time_point started) {
  stage.status = ok ? "ok" : "failed";
  stage.millis = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  if (!ok && failed_stage_.empty()) failed_stage_ = stage.name;
}

std::string RunManifest::to_json(bool with_timings) const {
  ordered_json doc;
  doc["status"] = status_;
  if (status_ != "ok") {
    doc["failed_stage"] = failed_stage_;
    doc["error"] = error_;
  }
  doc["config"] = ordered_json::parse(config_json_);
  auto digests = [](const std::vector<Digest>& list) {
    ordered_json out = ordered_json::array();
    for (const Digest& d : list) {
      out.push_back({{"name", d.name}, {"sha256", d.sha256}, {"lines", d.lines}});
    }
    return out;
  };
  doc["inputs"] = digests(inputs_);
  doc["outputs"] = digests(outputs_);
  ordered_json stages = ordered_json::array();
  ordered_json timings = ordered_json::object();
  for (const StageRecord& s : stages_) {
    ordered_json counters = ordered_json::object();
    for (const auto& [key, value] : s.counters) counters[key] = value;
    stages.push_back({{"name", s.name}, {"status", s.status}, {"counters", counters}});
    timings[s.name] = s.millis;
  }
  doc["stages"] = std::move(stages);
  if (with_timings) doc["timings_ms"] = std::move(timings);
  return doc.dump(2);
}

std::vector<std::string> PipelineResult::lines() const {
  std::vector<std::string> out;
  out.reserve(predictions.size());
  for (const auto& [id, facts] : predictions) out.push_back(prediction_line(id, facts));
  return out;
}

std::string prediction_line(const std::string& sample_id, const FactSet& facts) {
  ordered_json list = ordered_json::array();
  for (const Fact& f : facts.facts) {
    list.push_back({{"relation", f.relation}, {"tail", f.tail}});
  }
  ordered_json doc;
  doc["sample_id"] = sample_id;
  doc["head"] = facts.head;
  doc["facts"] = std::move(list);
  return doc.dump();
}

std::map<std::string, FactSet> parse_predictions(std::string_view content) {
  std::map<std::string, FactSet> out;
  std::size_t number = 0;
  for (const std::string& line : split_lines(content)) {
    ++number;
    if (trim(line).empty()) continue;
    try {
      json doc = json::parse(line);
      const std::string id = doc.at("sample_id").get<std::string>();
      FactSet facts;
      facts.head = doc.value("head", "");
      for (const json& f : doc.at("facts")) {
        facts.facts.push_back(make_fact(f.at("relation").get<std::string>(),
                                        f.at("tail").get<std::string>()));
      }
      if (!out.emplace(id, std::move(facts)).second) {
        throw ValidationError("duplicate sample_id '" + id + "'");
      }
    } catch (const json::exception& e) {
      throw LineError(number, std::string("malformed prediction: ") + e.what());
    } catch (const ValidationError& e) {
      throw LineError(number, e.what());
    }
  }
  return out;
}

namespace {

// Marks its stage failed unless finish() ran.
class StageScope {
 public:
  StageScope(RunManifest& manifest, std::string name)
      : manifest_(manifest),
        index_(manifest.stages().size()),
        started_(std::chrono::steady_clock::now()) {
    manifest_.begin_stage(std::move(name));
  }
  ~StageScope() {
    if (!finished_) manifest_.end_stage(stage(), false, started_);
  }
  StageScope(const StageScope&) = delete;
  StageScope& operator=(const StageScope&) = delete;

  StageRecord& stage() {
    return const_cast<StageRecord&>(manifest_.stages()[index_]);
  }
  void count(std::string_view key, std::int64_t delta = 1) { stage().count(key, delta); }
  void finish() {
    finished_ = true;
    manifest_.end_stage(stage(), true, started_);
  }

 private:
  RunManifest& manifest_;
  std::size_t index_;
  std::chrono::steady_clock::time_point started_;
  bool finished_ = false;
};

std::vector<const SampleRecord*> filter_corpus(const std::vector<SampleRecord>& corpus,
                                               const PipelineConfig& cfg,
                                               RunManifest& manifest) {
  StageScope stage(manifest, "filter");
  std::vector<const SampleRecord*> kept;
  for (const SampleRecord& r : corpus) {
    if (cfg.languages.empty() || cfg.languages.count(r.language) != 0) {
      kept.push_back(&r);
    }
  }
  stage.count("input", static_cast<std::int64_t>(corpus.size()));
  stage.count("kept", static_cast<std::int64_t>(kept.size()));
  stage.finish();
  return kept;
}

void validate_config(const PipelineConfig& cfg, RunManifest& manifest) {
  StageScope stage(manifest, "config");
  cfg.validate();
  stage.finish();
}

void record_input(const std::vector<SampleRecord>& corpus, RunManifest& manifest) {
  std::vector<std::string> lines;
  for (const SampleRecord& r : corpus) lines.push_back(serialize_sample(r));
  manifest.set_input("corpus", sha256_hex(join_lines(lines)), lines.size());
}

void record_output(const PipelineResult& result, RunManifest& manifest) {
  const auto lines = result.lines();
  manifest.set_output("predictions", sha256_hex(join_lines(lines)), lines.size());
}

// Runs an adapter and returns the string field `key` of each reply.
std::vector<std::string> adapter_field(AdapterRole role, const std::string& command,
                                       const std::vector<std::string>& input,
                                       const char* key) {
  std::vector<std::string> values;
  if (input.empty()) return values;
  AdapterContract contract{role, command, {}, {}};
  for (const std::string& line : run_adapter(contract, input)) {
    json reply = json::parse(line);
    auto it = reply.find(key);
    if (it == reply.end() || !it->is_string()) {
      throw AdapterError(std::string(to_string(role)),
                         std::string("reply lacks string field '") + key + "'");
    }
    values.push_back(it->get<std::string>());
  }
  return values;
}

}  // namespace

PipelineResult run_e2e(const std::vector<SampleRecord>& corpus,
                       const PipelineConfig& cfg, RunManifest& manifest) {
  manifest.set_config(cfg);
  record_input(corpus, manifest);
  validate_config(cfg, manifest);
  const auto samples = filter_corpus(corpus, cfg, manifest);

  std::vector<std::string> sentences;
  for (const SampleRecord* r : samples) sentences.push_back(r->sentence);
  if (cfg.translit) {
    StageScope stage(manifest, "translit");
    for (std::size_t i = 0; i < samples.size(); ++i) {
      TranslitResult t = to_devanagari(sentences[i], samples[i]->language);
      sentences[i] = std::move(t.text);
      stage.count("mapped", static_cast<std::int64_t>(t.report.mapped));
      stage.count("passthrough", static_cast<std::int64_t>(t.report.passthrough));
    }
    stage.finish();
  }

  std::vector<std::string> generated;
  {
    StageScope stage(manifest, "generate");
    std::vector<std::string> input;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      ordered_json line;
      line["sample_id"] = samples[i]->sample_id;
      line["language"] = to_string(samples[i]->language);
      line["head"] = samples[i]->head;
      line["sentence"] = sentences[i];
      input.push_back(line.dump());
    }
    generated = adapter_field(AdapterRole::kGenerator, cfg.generator_command, input,
                              "linearized");
    stage.count("samples", static_cast<std::int64_t>(generated.size()));
    stage.finish();
  }

  PipelineResult result;
  {
    StageScope stage(manifest, "parse");
    for (std::size_t i = 0; i < samples.size(); ++i) {
      ParseReport report = parse_linearized(generated[i]);
      stage.count("facts", static_cast<std::int64_t>(report.facts.size()));
      stage.count("dropped_fragments",
                  static_cast<std::int64_t>(report.dropped_fragments));
      stage.count("warnings", static_cast<std::int64_t>(report.warnings.size()));
      if (report.dropped_fragments > 0) stage.count("samples_with_drops");
      result.predictions.emplace_back(
          samples[i]->sample_id, FactSet{samples[i]->head, std::move(report.facts)});
    }
    stage.finish();
  }
  record_output(result, manifest);
  return result;
}

PipelineResult run_terc(const std::vector<SampleRecord>& corpus,
                        const PipelineConfig& cfg, RunManifest& manifest) {
  manifest.set_config(cfg);
  record_input(corpus, manifest);
  validate_config(cfg, manifest);
  const auto samples = filter_corpus(corpus, cfg, manifest);

  std::optional<SoftmaxModel> model;
  {
    StageScope stage(manifest, "load_model");
    model = SoftmaxModel::from_json(read_file(cfg.model_path));
    stage.count("labels", static_cast<std::int64_t>(model->num_classes()));
    stage.finish();
  }

  std::vector<std::string> translations;
  {
    StageScope stage(manifest, "translate");
    std::vector<std::string> input;
    for (const SampleRecord* r : samples) {
      ordered_json line;
      line["sample_id"] = r->sample_id;
      line["language"] = to_string(r->language);
      line["sentence"] = r->sentence;
      input.push_back(line.dump());
    }
    translations = adapter_field(AdapterRole::kTranslator, cfg.translator_command,
                                 input, "translation");
    stage.count("samples", static_cast<std::int64_t>(translations.size()));
    stage.finish();
  }

  std::vector<DateExtraction> masked;
  {
    StageScope stage(manifest, "dates");
    for (const std::string& text : translations) {
      masked.push_back(extract_dates(text));
      stage.count("mentions", static_cast<std::int64_t>(masked.back().mentions.size()));
    }
    stage.finish();
  }

  std::vector<AnnotatedSentence> annotated;
  {
    StageScope stage(manifest, "annotate");
    std::map<std::string, AnnotatedSentence> by_id;
    if (!cfg.conllu_path.empty()) {
      for (AnnotatedSentence& s : parse_conllu(read_file(cfg.conllu_path))) {
        by_id[s.sent_id] = std::move(s);
      }
    } else {
      std::vector<std::string> input;
      for (std::size_t i = 0; i < samples.size(); ++i) {
        ordered_json line;
        line["sample_id"] = samples[i]->sample_id;
        line["sentence"] = masked[i].masked;
        input.push_back(line.dump());
      }
      auto replies = adapter_field(AdapterRole::kAnnotator, cfg.annotator_command,
                                   input, "conllu");
      for (std::size_t i = 0; i < replies.size(); ++i) {
        auto parsed = parse_conllu(replies[i]);
        if (parsed.size() != 1) {
          throw AdapterError("annotator", "sample '" + samples[i]->sample_id +
                                              "' did not yield exactly one sentence");
        }
        by_id[samples[i]->sample_id] = std::move(parsed.front());
      }
    }
    for (const SampleRecord* r : samples) {
      auto it = by_id.find(r->sample_id);
      if (it == by_id.end()) {
        throw ValidationError("no annotation for sample '" + r->sample_id + "'");
      }
      annotated.push_back(it->second);
    }
    stage.count("sentences", static_cast<std::int64_t>(annotated.size()));
    stage.finish();
  }

  std::vector<std::vector<TailCandidate>> candidates;
  {
    StageScope stage(manifest, "candidates");
    for (std::size_t i = 0; i < samples.size(); ++i) {
      candidates.push_back(
          select_tail_candidates(annotated[i], samples[i]->head, masked[i].mentions));
      stage.count("candidates", static_cast<std::int64_t>(candidates.back().size()));
    }
    stage.finish();
  }

  if (!cfg.embeddings_path.empty()) {
    StageScope stage(manifest, "align");
    const EmbeddingStore store = load_embeddings(cfg.embeddings_path);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      std::vector<std::string> texts;
      for (const TailCandidate& c : candidates[i]) texts.push_back(c.text);
      std::vector<std::string> gold;
      for (const Fact& f : samples[i]->gold.facts) gold.push_back(f.tail);
      AlignmentResult aligned =
          align(texts, gold, store, AlignmentConfig{cfg.align_threshold});
      std::vector<bool> keep(texts.size(), false);
      for (const AlignedPair& p : aligned.pairs) keep[p.candidate] = true;
      std::vector<TailCandidate> kept;
      for (std::size_t c = 0; c < texts.size(); ++c) {
        if (keep[c]) kept.push_back(std::move(candidates[i][c]));
      }
      stage.count("aligned", static_cast<std::int64_t>(kept.size()));
      stage.count("unaligned", static_cast<std::int64_t>(texts.size() - kept.size()));
      candidates[i] = std::move(kept);
    }
    stage.finish();
  }

  PipelineResult result;
  {
    StageScope stage(manifest, "classify");
    for (std::size_t i = 0; i < samples.size(); ++i) {
      FactSet facts{samples[i]->head, {}};
      for (const TailCandidate& c : candidates[i]) {
        if (contains_marker(c.text)) {
          stage.count("skipped");
          continue;
        }
        Prediction p = predict(*model, samples[i]->head, c.text, samples[i]->sentence);
        facts.facts.push_back(make_fact(p.relation, c.text));
        stage.count("facts");
      }
      result.predictions.emplace_back(samples[i]->sample_id, std::move(facts));
    }
    stage.finish();
  }
  record_output(result, manifest);
  return result;
}

PipelineResult run_pipeline(const std::vector<SampleRecord>& corpus,
                            const PipelineConfig& cfg, RunManifest& manifest) {
  return cfg.mode == PipelineMode::kTerc ? run_terc(corpus, cfg, manifest)
                                         : run_e2e(corpus, cfg, manifest);
}

}  // namespace clfe
