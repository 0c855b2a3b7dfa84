#include "clfe/corpus.h"

#include <json.hpp>

#include "clfe/errors.h"
#include "clfe/jsonl.h"
#include "clfe/text.h"

namespace clfe {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& require(const json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw ValidationError(std::string("missing key '") + key + "'");
  }
  return *it;
}

std::string require_string(const json& object, const char* key) {
  const json& value = require(object, key);
  if (!value.is_string()) {
    throw ValidationError(std::string("key '") + key + "' must be a string");
  }
  return value.get<std::string>();
}

}  // namespace

SampleRecord parse_sample(std::string_view line) {
  json object;
  try {
    object = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  if (!object.is_object()) throw ValidationError("sample is not a JSON object");

  SampleRecord record;
  record.sample_id = require_string(object, "sample_id");
  record.language = parse_language(require_string(object, "language"));
  record.sentence = nfc(trim(require_string(object, "sentence")));
  record.head = nfc(trim(require_string(object, "head")));
  record.split = parse_split(require_string(object, "split"));
  if (record.sentence.empty()) throw ValidationError("empty sentence");
  if (record.head.empty()) throw ValidationError("empty head");

  const json& facts = require(object, "facts");
  if (!facts.is_array()) throw ValidationError("'facts' must be an array");
  record.gold.head = record.head;
  for (const json& fact : facts) {
    if (!fact.is_object()) throw ValidationError("fact is not an object");
    record.gold.facts.push_back(make_fact(nfc(require_string(fact, "relation")),
                                          nfc(require_string(fact, "tail"))));
  }
  return record;
}

std::string serialize_sample(const SampleRecord& record) {
  ordered_json facts = ordered_json::array();
  for (const Fact& fact : record.gold.facts) {
    facts.push_back({{"relation", fact.relation}, {"tail", fact.tail}});
  }
  ordered_json object;
  object["sample_id"] = record.sample_id;
  object["language"] = to_string(record.language);
  object["sentence"] = record.sentence;
  object["head"] = record.head;
  object["facts"] = std::move(facts);
  object["split"] = to_string(record.split);
  return object.dump();
}

std::vector<SampleRecord> parse_corpus(std::string_view content) {
  std::vector<SampleRecord> records;
  std::size_t line_number = 0;
  for (const std::string& line : split_lines(content)) {
    ++line_number;
    if (trim(line).empty()) continue;
    try {
      records.push_back(parse_sample(line));
    } catch (const ValidationError& e) {
      throw LineError(line_number, e.what());
    }
  }
  return records;
}

std::vector<SampleRecord> load_corpus(const std::filesystem::path& path) {
  return parse_corpus(read_file(path));
}

}  // namespace clfe
