#include "clfe/chunker.h"

#include <algorithm>
#include <set>

#include "clfe/text.h"

namespace clfe {

namespace {

bool is_nominal(const AnnotatedToken& t) {
  return t.upos == "NOUN" || t.upos == "PROPN" || t.upos == "PRON";
}

bool is_chunk_modifier(std::string_view deprel) {
  if (deprel == "nmod:poss" || deprel == "det:poss") return true;
  std::string_view base = deprel.substr(0, deprel.find(':'));
  return base == "det" || base == "amod" || base == "compound" ||
         base == "nummod" || base == "poss" || base == "flat";
}

const DateMention* dummy_of(const AnnotatedToken& t,
                            const std::vector<DateMention>& dates) {
  for (const DateMention& d : dates) {
    if (t.surface == d.dummy) return &d;
  }
  return nullptr;
}

// Span text with date dummies rendered as their ISO values.
std::string candidate_text(const AnnotatedSentence& s, int first, int last,
                           const std::vector<DateMention>& dates) {
  std::string out;
  for (int i = first; i <= last; ++i) {
    const AnnotatedToken& t = s.token(i);
    const DateMention* d = dummy_of(t, dates);
    out += d != nullptr ? d->iso : t.surface;
    if (i < last && t.space_after) out += ' ';
  }
  return out;
}

}  // namespace

std::string_view to_string(CandidateKind kind) {
  switch (kind) {
    case CandidateKind::kChunk: return "chunk";
    case CandidateKind::kPropnSpan: return "propn_span";
    case CandidateKind::kRootNoun: return "root_noun";
    case CandidateKind::kDate: return "date";
  }
  return "?";
}

std::vector<NounChunk> noun_chunks(const AnnotatedSentence& s) {
  const int n = static_cast<int>(s.tokens.size());
  std::vector<std::vector<int>> children(n + 1);
  for (const AnnotatedToken& t : s.tokens) children[t.head_index].push_back(t.index);

  std::vector<NounChunk> chunks;
  for (int root = n; root >= 1; --root) {
    if (!is_nominal(s.token(root))) continue;
    bool inside = false;
    for (const NounChunk& c : chunks) {
      if (root >= c.first && root <= c.last) inside = true;
    }
    if (inside) continue;

    int first = root;
    std::vector<int> stack = {root};
    while (!stack.empty()) {
      int node = stack.back();
      stack.pop_back();
      for (int child : children[node]) {
        if (child < root && is_chunk_modifier(s.token(child).deprel)) {
          first = std::min(first, child);
          stack.push_back(child);
        }
      }
    }
    chunks.push_back(NounChunk{first, root, root});
  }
  std::reverse(chunks.begin(), chunks.end());
  return chunks;
}

bool overlaps_head(std::string_view text, std::string_view head) {
  const auto text_terms = term_set(text);
  const auto head_terms = term_set(head);
  if (std::includes(head_terms.begin(), head_terms.end(), text_terms.begin(),
                    text_terms.end())) {
    return true;
  }
  return jaccard(text_terms, head_terms) >= kHeadOverlapIoU;
}

std::vector<TailCandidate> select_tail_candidates(
    const AnnotatedSentence& s, std::string_view head,
    const std::vector<DateMention>& dates) {
  const int n = static_cast<int>(s.tokens.size());

  // Rules 1 and 2 filter the chunk pool.
  std::vector<NounChunk> surviving;
  for (const NounChunk& c : noun_chunks(s)) {
    const AnnotatedToken& root = s.token(c.root_index);
    if (dummy_of(root, dates) != nullptr) continue;
    if (root.upos == "PRON") continue;
    if (overlaps_head(candidate_text(s, c.first, c.last, dates), head)) continue;
    surviving.push_back(c);
  }

  std::vector<TailCandidate> ordered;

  // Rule 3: maximal ADJ/PROPN runs containing a PROPN.
  for (int i = 1; i <= n;) {
    auto in_run = [&](int k) {
      const AnnotatedToken& t = s.token(k);
      return (t.upos == "ADJ" || t.upos == "PROPN") && dummy_of(t, dates) == nullptr;
    };
    if (!in_run(i)) {
      ++i;
      continue;
    }
    int j = i;
    bool has_propn = false;
    while (j <= n && in_run(j)) {
      has_propn = has_propn || s.token(j).upos == "PROPN";
      ++j;
    }
    if (has_propn) {
      ordered.push_back({span_text(s, i, j - 1), CandidateKind::kPropnSpan, i, j - 1});
    }
    i = j;
  }

  // Rule 4: NOUN roots of surviving chunks.
  for (const NounChunk& c : surviving) {
    if (s.token(c.root_index).upos == "NOUN") {
      ordered.push_back({s.token(c.root_index).surface, CandidateKind::kRootNoun,
                         c.root_index, c.root_index});
    }
  }
  for (const NounChunk& c : surviving) {
    ordered.push_back({candidate_text(s, c.first, c.last, dates),
                       CandidateKind::kChunk, c.first, c.last});
  }
  for (const DateMention& d : dates) {
    ordered.push_back({d.iso, CandidateKind::kDate, static_cast<int>(d.begin),
                       static_cast<int>(d.end)});
  }

  std::vector<TailCandidate> out;
  std::set<std::string> seen;
  for (TailCandidate& c : ordered) {
    if (overlaps_head(c.text, head)) continue;
    if (!seen.insert(to_lower_ascii(c.text)).second) continue;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace clfe
