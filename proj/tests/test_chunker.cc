#include <doctest.h>

#include "clfe/chunker.h"
#include "clfe/conllu.h"
#include "clfe/dates.h"
#include "clfe/jsonl.h"
#include "test_support.h"

using namespace clfe;

namespace {

AnnotatedSentence sindhu() {
  return parse_conllu(read_file(clfe::testing::data_path("sindhu.conllu"))).at(0);
}

}  // namespace

TEST_CASE("noun chunks on the annotated fixture") {
  std::vector<std::pair<int, int>> spans;
  for (const NounChunk& c : noun_chunks(sindhu())) spans.emplace_back(c.first, c.last);
  CHECK(spans == std::vector<std::pair<int, int>>{{1, 1}, {3, 5}, {7, 8}, {12, 12}, {14, 14}});
}

TEST_CASE("tail candidates follow the rule trace") {
  const DateExtraction dates = extract_dates(
      "Sindhu is the second Indian after Saina Nehwal to win in badminton after 2012 .");
  REQUIRE(dates.mentions.size() == 1);
  auto cands = select_tail_candidates(sindhu(), "P. V. Sindhu", dates.mentions);
  std::vector<std::pair<std::string, CandidateKind>> got;
  for (const auto& c : cands) got.emplace_back(c.text, c.kind);
  CHECK(got == std::vector<std::pair<std::string, CandidateKind>>{
                   {"Saina Nehwal", CandidateKind::kPropnSpan},
                   {"Indian", CandidateKind::kRootNoun},
                   {"badminton", CandidateKind::kRootNoun},
                   {"the second Indian", CandidateKind::kChunk},
                   {"2012", CandidateKind::kDate}});
}

TEST_CASE("head overlap") {
  CHECK(overlaps_head("Sindhu", "P. V. Sindhu"));
  CHECK(overlaps_head("V. Sindhu", "P. V. Sindhu"));
  CHECK_FALSE(overlaps_head("Saina Nehwal", "P. V. Sindhu"));
  // IoU of {saina, nehwal, coach} vs {saina, nehwal} = 2/3.
  CHECK(overlaps_head("Saina Nehwal coach", "Saina Nehwal"));
  CHECK_FALSE(overlaps_head("the coach of Saina", "Saina Nehwal"));
}

TEST_CASE("pronoun-rooted chunks yield nothing") {
  auto s = parse_conllu(
      "1\tShe\tshe\tPRON\t_\t_\t2\tnsubj\t_\t_\n"
      "2\twon\twin\tVERB\t_\t_\t0\troot\t_\t_\n"
      "3\tgold\tgold\tNOUN\t_\t_\t2\tobj\t_\t_\n").at(0);
  auto cands = select_tail_candidates(s, "Someone", {});
  REQUIRE(cands.size() == 1);
  CHECK(cands[0].text == "gold");
  CHECK(cands[0].kind == CandidateKind::kRootNoun);
}
