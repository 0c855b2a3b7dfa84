#include "clfe/mock_adapters.h"

#include <json.hpp>
#include <map>

#include "clfe/conllu.h"
#include "clfe/errors.h"
#include "clfe/jsonl.h"
#include "clfe/text.h"

namespace clfe {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_object(const std::string& line, std::size_t number) {
  auto object = json::parse(line, nullptr, false);
  if (object.is_discarded() || !object.is_object() ||
      !object.contains("sample_id")) {
    throw LineError(number, "adapter input is not a JSON object with sample_id");
  }
  return object;
}

}  // namespace

void run_mock_adapter(AdapterRole role, const std::filesystem::path& canned,
                      const std::filesystem::path& input,
                      const std::filesystem::path& output) {
  std::map<std::string, std::string> lookup;
  if (role == AdapterRole::kGenerator) {
    std::size_t number = 0;
    for (const std::string& line : read_lines(canned)) {
      ++number;
      if (trim(line).empty()) continue;
      json object = parse_object(line, number);
      lookup[object.at("sample_id").get<std::string>()] =
          object.value("linearized", "");
    }
  } else if (role == AdapterRole::kAnnotator) {
    for (const AnnotatedSentence& s : parse_conllu(read_file(canned))) {
      lookup[s.sent_id] = to_conllu(s);
    }
  }

  std::vector<std::string> out;
  std::size_t number = 0;
  for (const std::string& line : read_lines(input)) {
    ++number;
    json object = parse_object(line, number);
    const std::string id = object.at("sample_id").get<std::string>();
    ordered_json reply;
    reply["sample_id"] = id;
    if (role == AdapterRole::kTranslator) {
      reply["translation"] = object.value("sentence", "");
    } else {
      auto it = lookup.find(id);
      if (it == lookup.end()) {
        throw LineError(number, "no canned output for sample '" + id + "'");
      }
      reply[role == AdapterRole::kGenerator ? "linearized" : "conllu"] = it->second;
    }
    out.push_back(reply.dump());
  }
  write_lines(output, out);
}

}  // namespace clfe
