#include "clfe/codec.h"

#include "clfe/errors.h"
#include "clfe/text.h"

namespace clfe {

std::string serialize_facts(const FactSet& facts) {
  std::string out;
  for (const Fact& fact : facts.facts) {
    // Re-validate: FactSet is an aggregate and may hold unchecked payloads.
    Fact checked = make_fact(fact.relation, fact.tail);
    if (checked != fact) {
      throw ValidationError("fact has surrounding whitespace: '" +
                            fact.relation + "' / '" + fact.tail + "'");
    }
    if (!out.empty()) out += ' ';
    out += kRelationMarker;
    out += ' ';
    out += fact.relation;
    out += ' ';
    out += kTailMarker;
    out += ' ';
    out += fact.tail;
  }
  return out;
}

ParseReport parse_linearized(std::string_view text) {
  ParseReport report;
  std::size_t first = text.find(kRelationMarker);
  std::string_view prefix =
      trim(text.substr(0, first == std::string_view::npos ? text.size() : first));
  if (!prefix.empty()) {
    report.warnings.push_back("ignored text before first <R>: '" +
                              std::string(prefix) + "'");
  }
  std::size_t fragment_index = 0;
  std::size_t pos = first;
  while (pos != std::string_view::npos) {
    std::size_t body_begin = pos + kRelationMarker.size();
    std::size_t next = text.find(kRelationMarker, body_begin);
    std::string_view body = text.substr(
        body_begin, next == std::string_view::npos ? std::string_view::npos
                                                   : next - body_begin);
    pos = next;
    const std::string label = "fragment " + std::to_string(fragment_index++);

    std::size_t tail_marker = body.find(kTailMarker);
    if (tail_marker == std::string_view::npos) {
      ++report.dropped_fragments;
      report.warnings.push_back(label + ": missing <T>");
      continue;
    }
    std::string_view relation = trim(body.substr(0, tail_marker));
    std::string_view tail = trim(body.substr(tail_marker + kTailMarker.size()));
    if (tail.find(kTailMarker) != std::string_view::npos) {
      ++report.dropped_fragments;
      report.warnings.push_back(label + ": repeated <T>");
      continue;
    }
    if (relation.empty() || tail.empty()) {
      ++report.dropped_fragments;
      report.warnings.push_back(label + (relation.empty() ? ": empty relation"
                                                          : ": empty tail"));
      continue;
    }
    report.facts.push_back(Fact{std::string(relation), std::string(tail)});
  }
  return report;
}

}  // namespace clfe
