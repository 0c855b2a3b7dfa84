#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clfe/adapter.h"
#include "clfe/align.h"
#include "clfe/chunker.h"
#include "clfe/codec.h"
#include "clfe/conllu.h"
#include "clfe/corpus.h"
#include "clfe/dates.h"
#include "clfe/embeddings.h"
#include "clfe/errors.h"
#include "clfe/evalkit.h"
#include "clfe/jsonl.h"
#include "clfe/mock_adapters.h"
#include "clfe/pipeline.h"
#include "clfe/relclf.h"
#include "clfe/stats.h"
#include "clfe/text.h"
#include "clfe/translit.h"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;
using namespace clfe;

constexpr int kExitValidation = 2;
constexpr int kExitAdapter = 3;
constexpr int kExitIo = 4;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kValidation: return kExitValidation;
    case ErrorKind::kAdapter: return kExitAdapter;
    case ErrorKind::kIo: return kExitIo;
  }
  return kExitValidation;
}

// Writes to `path`, or stdout when it is "-" or empty.
void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
  } else {
    write_file(path, content);
  }
}

json parse_json_line(const std::string& line, std::size_t number) {
  try {
    return json::parse(line);
  } catch (const json::exception& e) {
    throw LineError(number, std::string("malformed JSON: ") + e.what());
  }
}

template <typename Fn>
void for_each_json_line(const std::string& path, Fn&& fn) {
  std::size_t number = 0;
  for (const std::string& line : read_lines(path)) {
    ++number;
    if (trim(line).empty()) continue;
    json doc = parse_json_line(line, number);
    try {
      fn(doc, number);
    } catch (const json::exception& e) {
      throw LineError(number, e.what());
    }
  }
}

std::map<std::string, const SampleRecord*> index_corpus(
    const std::vector<SampleRecord>& corpus) {
  std::map<std::string, const SampleRecord*> by_id;
  for (const SampleRecord& r : corpus) by_id[r.sample_id] = &r;
  return by_id;
}

const SampleRecord& lookup(const std::map<std::string, const SampleRecord*>& by_id,
                           const std::string& id) {
  auto it = by_id.find(id);
  if (it == by_id.end()) throw ValidationError("sample '" + id + "' not in corpus");
  return *it->second;
}

std::vector<SampleRecord> filter_split(std::vector<SampleRecord> corpus,
                                       const std::string& split) {
  if (split.empty()) return corpus;
  const Split wanted = parse_split(split);
  std::erase_if(corpus, [&](const SampleRecord& r) { return r.split != wanted; });
  return corpus;
}

struct Options {
  std::string corpus, out, in, conllu, candidates, embeddings, model, pairs, pred,
      split, config, manifest, canned, role, mode, translator, generator,
      annotator, format = "text";
  std::vector<std::string> languages;
  std::vector<std::size_t> ks{1, 5, 10, 20};
  std::size_t top_n = 20;
  double threshold = kDefaultAlignThreshold;
  TrainConfig train;
  bool no_class_weights = false;
  std::optional<bool> translit;
  std::optional<double> run_threshold;
  std::optional<std::uint64_t> run_seed;
  std::uint32_t dim = kDefaultFeatureDim;
};

int cmd_ingest(const Options& o) {
  std::vector<std::string> lines;
  for (const SampleRecord& r : load_corpus(o.corpus)) lines.push_back(serialize_sample(r));
  emit(o.out, join_lines(lines));
  std::cerr << lines.size() << " records\n";
  return 0;
}

int cmd_stats(const Options& o) {
  const DatasetStats stats = compute_stats(load_corpus(o.corpus));
  emit(o.out, o.format == "json" ? stats_to_json(stats, o.ks) + "\n"
                                 : render_stats_table(stats, o.ks, o.top_n));
  return 0;
}

int cmd_translit(const Options& o) {
  std::vector<std::string> out;
  for_each_json_line(o.in, [&](json& doc, std::size_t) {
    const Language lang = parse_language(doc.at("language").get<std::string>());
    TranslitResult t = to_devanagari(doc.at("sentence").get<std::string>(), lang);
    doc["sentence"] = t.text;
    json cps = json::array();
    for (char32_t cp : t.report.passthrough_codepoints) cps.push_back(static_cast<std::uint32_t>(cp));
    doc["translit_report"] = {{"mapped", t.report.mapped},
                              {"passthrough", t.report.passthrough},
                              {"passthrough_codepoints", cps}};
    out.push_back(doc.dump());
  });
  emit(o.out, join_lines(out));
  return 0;
}

int cmd_chunk(const Options& o) {
  const auto corpus = load_corpus(o.corpus);
  const auto by_id = index_corpus(corpus);
  std::vector<std::string> out;
  for (const AnnotatedSentence& s : parse_conllu(read_file(o.conllu))) {
    const SampleRecord& r = lookup(by_id, s.sent_id);
    const DateExtraction dates = extract_dates(r.sentence);
    ordered_json list = ordered_json::array();
    for (const TailCandidate& c : select_tail_candidates(s, r.head, dates.mentions)) {
      list.push_back({{"text", c.text}, {"kind", to_string(c.kind)}});
    }
    ordered_json line;
    line["sample_id"] = r.sample_id;
    line["candidates"] = std::move(list);
    out.push_back(line.dump());
  }
  emit(o.out, join_lines(out));
  return 0;
}

std::map<std::string, std::vector<std::string>> load_candidates(const std::string& path) {
  std::map<std::string, std::vector<std::string>> out;
  for_each_json_line(path, [&](const json& doc, std::size_t number) {
    auto& list = out[doc.at("sample_id").get<std::string>()];
    if (!list.empty()) throw LineError(number, "duplicate sample_id");
    for (const json& c : doc.at("candidates")) list.push_back(c.at("text").get<std::string>());
  });
  return out;
}

int cmd_align(const Options& o) {
  const auto corpus = load_corpus(o.corpus);
  const auto by_id = index_corpus(corpus);
  const EmbeddingStore store = load_embeddings(o.embeddings);
  std::vector<std::string> out;
  for (const auto& [id, cands] : load_candidates(o.candidates)) {
    const SampleRecord& r = lookup(by_id, id);
    std::vector<std::string> gold;
    for (const Fact& f : r.gold.facts) gold.push_back(f.tail);
    const AlignmentResult result = align(cands, gold, store, AlignmentConfig{o.threshold});
    for (const AlignedPair& p : result.pairs) {
      ordered_json line;
      line["sample_id"] = id;
      line["head"] = r.head;
      line["tail"] = cands[p.candidate];
      line["gold_tail"] = gold[p.gold];
      line["relation"] = r.gold.facts[p.gold].relation;
      line["sentence"] = r.sentence;
      line["score"] = p.score.total;
      out.push_back(line.dump());
    }
  }
  emit(o.out, join_lines(out));
  return 0;
}

int cmd_train(const Options& o) {
  std::vector<TrainingPair> pairs;
  if (!o.pairs.empty()) {
    for_each_json_line(o.pairs, [&](const json& doc, std::size_t) {
      pairs.push_back({doc.at("head").get<std::string>(), doc.at("tail").get<std::string>(),
                       doc.at("sentence").get<std::string>(),
                       doc.at("relation").get<std::string>()});
    });
  } else {
    for (const SampleRecord& r : filter_split(load_corpus(o.corpus), o.split)) {
      for (const Fact& f : r.gold.facts) pairs.push_back({r.head, f.tail, r.sentence, f.relation});
    }
  }
  TrainConfig cfg = o.train;
  cfg.class_weighting = !o.no_class_weights;
  const TrainResult result = train(pairs, cfg, o.dim);
  write_file(o.out, result.model.to_json());
  for (std::size_t e = 0; e < result.loss_trace.size(); ++e) {
    std::fprintf(stderr, "epoch %zu loss %.6f\n", e + 1, result.loss_trace[e]);
  }
  return 0;
}

int cmd_predict(const Options& o) {
  const SoftmaxModel model = SoftmaxModel::from_json(read_file(o.model));
  const auto corpus = load_corpus(o.corpus);
  const auto by_id = index_corpus(corpus);
  std::vector<std::string> out;
  for (const auto& [id, cands] : load_candidates(o.candidates)) {
    const SampleRecord& r = lookup(by_id, id);
    FactSet facts{r.head, {}};
    for (const std::string& tail : cands) {
      facts.facts.push_back(make_fact(predict(model, r.head, tail, r.sentence).relation, tail));
    }
    out.push_back(prediction_line(id, facts));
  }
  emit(o.out, join_lines(out));
  return 0;
}

int cmd_linearize(const Options& o) {
  std::vector<std::string> out;
  for (const SampleRecord& r : load_corpus(o.corpus)) {
    ordered_json line;
    line["sample_id"] = r.sample_id;
    line["linearized"] = serialize_facts(r.gold);
    out.push_back(line.dump());
  }
  emit(o.out, join_lines(out));
  return 0;
}

int cmd_delinearize(const Options& o) {
  std::map<std::string, std::string> heads;
  if (!o.corpus.empty()) {
    for (const SampleRecord& r : load_corpus(o.corpus)) heads[r.sample_id] = r.head;
  }
  std::vector<std::string> out;
  std::size_t dropped = 0;
  for_each_json_line(o.in, [&](const json& doc, std::size_t number) {
    const std::string id = doc.at("sample_id").get<std::string>();
    ParseReport report = parse_linearized(doc.at("linearized").get<std::string>());
    dropped += report.dropped_fragments;
    for (const std::string& w : report.warnings) {
      std::cerr << "line " << number << ": " << w << "\n";
    }
    auto head = heads.find(id);
    out.push_back(prediction_line(
        id, FactSet{head == heads.end() ? "" : head->second, std::move(report.facts)}));
  });
  emit(o.out, join_lines(out));
  std::cerr << "dropped fragments: " << dropped << "\n";
  return 0;
}

int cmd_evaluate(const Options& o) {
  const auto corpus = filter_split(load_corpus(o.corpus), o.split);
  const EvalReport report = score_corpus(parse_predictions(read_file(o.pred)), corpus);
  emit(o.out, o.format == "json" ? report_to_json(report) + "\n"
                                 : render_report_text(report));
  return 0;
}

int cmd_run(const Options& o) {
  PipelineConfig cfg;
  RunManifest manifest;
  int code = 0;
  try {
    if (!o.config.empty()) cfg = merge_config_json(cfg, read_file(o.config));
    if (!o.mode.empty()) cfg.mode = parse_pipeline_mode(o.mode);
    if (!o.languages.empty()) {
      cfg.languages.clear();
      for (const std::string& code_text : o.languages) cfg.languages.insert(parse_language(code_text));
    }
    if (o.translit) cfg.translit = *o.translit;
    if (o.run_threshold) cfg.align_threshold = *o.run_threshold;
    if (!o.embeddings.empty()) cfg.embeddings_path = o.embeddings;
    if (!o.model.empty()) cfg.model_path = o.model;
    if (!o.conllu.empty()) cfg.conllu_path = o.conllu;
    if (!o.translator.empty()) cfg.translator_command = o.translator;
    if (!o.generator.empty()) cfg.generator_command = o.generator;
    if (!o.annotator.empty()) cfg.annotator_command = o.annotator;
    if (o.run_seed) cfg.seed = *o.run_seed;
    manifest.set_config(cfg);

    const auto corpus = load_corpus(o.corpus);
    const PipelineResult result = run_pipeline(corpus, cfg, manifest);
    emit(o.out, join_lines(result.lines()));
  } catch (const Error& e) {
    manifest.fail(e.what());
    code = exit_code_for(e);
    std::cerr << "error: " << e.what() << "\n";
  }
  // Without --manifest the manifest sits beside the predictions, or goes to
  // stderr when predictions go to stdout.
  std::string manifest_path = o.manifest;
  if (manifest_path.empty() && !o.out.empty() && o.out != "-") {
    manifest_path = o.out + ".manifest.json";
  }
  if (manifest_path.empty()) {
    std::cerr << manifest.to_json() << "\n";
  } else {
    try {
      write_file(manifest_path, manifest.to_json() + "\n");
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      if (code == 0) code = kExitIo;
    }
  }
  return code;
}

int cmd_mock(const Options& o) {
  run_mock_adapter(parse_adapter_role(o.role), o.canned, o.in, o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cross-lingual fact extraction toolkit"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> action;

  auto bind = [&](CLI::App* sub, int (*fn)(const Options&)) {
    sub->callback([&action, fn] { action = fn; });
  };

  auto* ingest = app.add_subcommand("ingest", "Validate and normalize a corpus");
  ingest->add_option("--corpus", o.corpus, "Corpus JSONL")->required();
  ingest->add_option("--out", o.out, "Normalized corpus (default stdout)");
  bind(ingest, cmd_ingest);

  auto* stats = app.add_subcommand("stats", "Dataset statistics");
  stats->add_option("--corpus", o.corpus)->required();
  stats->add_option("--out", o.out);
  stats->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  stats->add_option("--k", o.ks, "Top-k mass cut-offs");
  stats->add_option("--top", o.top_n, "Relations listed in the table");
  bind(stats, cmd_stats);

  auto* translit = app.add_subcommand("translit", "Map Indic scripts to Devanagari");
  translit->add_option("--in", o.in)->required();
  translit->add_option("--out", o.out);
  bind(translit, cmd_translit);

  auto* chunk = app.add_subcommand("chunk", "Select tail candidates from CoNLL-U");
  chunk->add_option("--conllu", o.conllu)->required();
  chunk->add_option("--corpus", o.corpus)->required();
  chunk->add_option("--out", o.out);
  bind(chunk, cmd_chunk);

  auto* align_cmd = app.add_subcommand("align", "Align candidates with gold tails");
  align_cmd->add_option("--candidates", o.candidates)->required();
  align_cmd->add_option("--corpus", o.corpus)->required();
  align_cmd->add_option("--embeddings", o.embeddings)->required();
  align_cmd->add_option("--threshold", o.threshold);
  align_cmd->add_option("--out", o.out);
  bind(align_cmd, cmd_align);

  auto* train_cmd = app.add_subcommand("train", "Train the relation classifier");
  auto* pairs_opt = train_cmd->add_option("--pairs", o.pairs, "Aligned-pair JSONL");
  auto* corpus_opt = train_cmd->add_option("--corpus", o.corpus, "Train on gold facts");
  pairs_opt->excludes(corpus_opt);
  train_cmd->add_option("--split", o.split);
  train_cmd->add_option("--out", o.out)->required();
  train_cmd->add_option("--lr", o.train.learning_rate);
  train_cmd->add_option("--epochs", o.train.epochs);
  train_cmd->add_option("--batch-size", o.train.batch_size);
  train_cmd->add_option("--seed", o.train.seed);
  train_cmd->add_option("--l2", o.train.l2);
  train_cmd->add_option("--dim", o.dim);
  train_cmd->add_flag("--no-class-weights", o.no_class_weights);
  bind(train_cmd, cmd_train);

  auto* predict_cmd = app.add_subcommand("predict", "Classify tail candidates");
  predict_cmd->add_option("--model", o.model)->required();
  predict_cmd->add_option("--candidates", o.candidates)->required();
  predict_cmd->add_option("--corpus", o.corpus)->required();
  predict_cmd->add_option("--out", o.out);
  bind(predict_cmd, cmd_predict);

  auto* linearize = app.add_subcommand("linearize", "Gold facts to target strings");
  linearize->add_option("--corpus", o.corpus)->required();
  linearize->add_option("--out", o.out);
  bind(linearize, cmd_linearize);

  auto* delinearize = app.add_subcommand("delinearize", "Generated strings to facts");
  delinearize->add_option("--in", o.in)->required();
  delinearize->add_option("--corpus", o.corpus, "Supplies head entities");
  delinearize->add_option("--out", o.out);
  bind(delinearize, cmd_delinearize);

  auto* evaluate = app.add_subcommand("evaluate", "Strict word-match P/R/F1");
  evaluate->add_option("--pred", o.pred)->required();
  evaluate->add_option("--corpus", o.corpus)->required();
  evaluate->add_option("--split", o.split);
  evaluate->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  evaluate->add_option("--out", o.out);
  bind(evaluate, cmd_evaluate);

  auto* run = app.add_subcommand("run", "Run a full pipeline");
  run->add_option("--mode", o.mode)->check(CLI::IsMember({"terc", "e2e"}));
  run->add_option("--corpus", o.corpus)->required();
  run->add_option("--config", o.config, "JSON config file");
  run->add_option("--out", o.out);
  run->add_option("--manifest", o.manifest);
  run->add_option("--languages", o.languages)->delimiter(',');
  run->add_flag("--translit,!--no-translit", o.translit);
  run->add_option("--threshold", o.run_threshold);
  run->add_option("--embeddings", o.embeddings);
  run->add_option("--model", o.model);
  run->add_option("--conllu", o.conllu);
  run->add_option("--translator", o.translator);
  run->add_option("--generator", o.generator);
  run->add_option("--annotator", o.annotator);
  run->add_option("--seed", o.run_seed);
  bind(run, cmd_run);

  auto* mock = app.add_subcommand("mock-adapter", "Canned adapter for tests");
  mock->add_option("--role", o.role)->required()->check(
      CLI::IsMember({"translator", "generator", "annotator"}));
  mock->add_option("--canned", o.canned);
  mock->add_option("input", o.in)->required();
  mock->add_option("output", o.out)->required();
  bind(mock, cmd_mock);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }
  try {
    return action(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
