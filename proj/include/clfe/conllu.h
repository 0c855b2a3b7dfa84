#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace clfe {

struct AnnotatedToken {
  int index = 0;  // 1-based
  std::string surface;
  std::string upos;
  int head_index = 0;  // 0 = root
  std::string deprel;
  bool space_after = true;  // MISC SpaceAfter=No clears it
};

struct AnnotatedSentence {
  std::string sent_id;  // from "# sent_id = ...", may be empty
  std::string raw;      // "# text = ..." or tokens joined by spaces
  std::vector<AnnotatedToken> tokens;

  const AnnotatedToken& token(int index) const { return tokens.at(index - 1); }
};

// CoNLL-U reader. Uses ID, FORM, UPOS, HEAD, DEPREL and MISC (SpaceAfter);
// skips multiword-token ranges and empty nodes. Every sentence is checked
// for contiguous IDs and a single-rooted acyclic tree. Errors are
// LineError with the offending 1-based line.
std::vector<AnnotatedSentence> parse_conllu(std::string_view text);

// Surface text of tokens [first, last] (1-based, inclusive) honouring
// SpaceAfter=No.
std::string span_text(const AnnotatedSentence& sentence, int first, int last);

// Renders a sentence back to CoNLL-U (sent_id/text comments, unused columns
// as "_"), terminated by a blank line.
std::string to_conllu(const AnnotatedSentence& sentence);

}  // namespace clfe
