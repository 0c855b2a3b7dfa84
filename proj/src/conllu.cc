#include "clfe/conllu.h"

#include <charconv>
#include <optional>

#include "clfe/errors.h"
#include "clfe/jsonl.h"
#include "clfe/text.h"

namespace clfe {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cols.push_back(line.substr(start));
      break;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cols;
}

bool parse_int(std::string_view text, int& value) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

struct Pending {
  AnnotatedSentence sentence;
  std::size_t first_line = 0;
  std::vector<std::size_t> token_lines;
  bool has_text = false;
};

void finish(Pending& pending, std::vector<AnnotatedSentence>& out) {
  AnnotatedSentence& s = pending.sentence;
  if (s.tokens.empty()) return;
  const int n = static_cast<int>(s.tokens.size());
  int roots = 0;
  for (const AnnotatedToken& t : s.tokens) {
    if (t.head_index < 0 || t.head_index > n) {
      throw LineError(pending.token_lines[t.index - 1],
                      "token " + std::to_string(t.index) +
                          " has head outside the sentence");
    }
    if (t.head_index == 0) ++roots;
  }
  if (roots != 1) {
    throw LineError(pending.first_line,
                    "sentence has " + std::to_string(roots) +
                        " roots, expected exactly one");
  }
  for (const AnnotatedToken& t : s.tokens) {
    int cursor = t.index;
    for (int steps = 0; cursor != 0; ++steps) {
      if (steps > n) {
        throw LineError(pending.first_line,
                        "dependency cycle through token " +
                            std::to_string(t.index));
      }
      cursor = s.token(cursor).head_index;
    }
  }
  if (!pending.has_text) s.raw = span_text(s, 1, n);
  out.push_back(std::move(s));
}

}  // namespace

std::vector<AnnotatedSentence> parse_conllu(std::string_view text) {
  std::vector<AnnotatedSentence> out;
  Pending pending;
  bool open = false;
  std::size_t line_number = 0;
  for (const std::string& line : split_lines(text)) {
    ++line_number;
    if (trim(line).empty()) {
      if (open) finish(pending, out);
      pending = Pending{};
      open = false;
      continue;
    }
    if (!open) {
      open = true;
      pending.first_line = line_number;
    }
    if (line.front() == '#') {
      std::string_view body = trim(std::string_view(line).substr(1));
      auto value_of = [&](std::string_view key) -> std::optional<std::string> {
        if (body.substr(0, key.size()) != key) return std::nullopt;
        std::string_view rest = trim(body.substr(key.size()));
        if (rest.empty() || rest.front() != '=') return std::nullopt;
        return std::string(trim(rest.substr(1)));
      };
      if (auto id = value_of("sent_id")) pending.sentence.sent_id = *id;
      if (auto raw = value_of("text")) {
        pending.sentence.raw = *raw;
        pending.has_text = true;
      }
      continue;
    }
    auto cols = split_tabs(line);
    if (cols.size() != 10) {
      throw LineError(line_number, "expected 10 tab-separated columns, got " +
                                       std::to_string(cols.size()));
    }
    if (cols[0].find_first_of("-.") != std::string_view::npos) continue;

    AnnotatedToken token;
    if (!parse_int(cols[0], token.index)) {
      throw LineError(line_number, "bad token ID '" + std::string(cols[0]) + "'");
    }
    const int expected = static_cast<int>(pending.sentence.tokens.size()) + 1;
    if (token.index != expected) {
      throw LineError(line_number, "non-contiguous token ID " +
                                       std::to_string(token.index) +
                                       ", expected " + std::to_string(expected));
    }
    if (!parse_int(cols[6], token.head_index)) {
      throw LineError(line_number, "bad HEAD '" + std::string(cols[6]) + "'");
    }
    if (token.head_index == token.index) {
      throw LineError(line_number, "token is its own head");
    }
    token.surface = std::string(cols[1]);
    token.upos = std::string(cols[3]);
    token.deprel = std::string(cols[7]);
    token.space_after = cols[9].find("SpaceAfter=No") == std::string_view::npos;
    pending.sentence.tokens.push_back(std::move(token));
    pending.token_lines.push_back(line_number);
  }
  if (open) finish(pending, out);
  return out;
}

std::string span_text(const AnnotatedSentence& sentence, int first, int last) {
  std::string out;
  for (int i = first; i <= last; ++i) {
    const AnnotatedToken& t = sentence.token(i);
    out += t.surface;
    if (i < last && t.space_after) out += ' ';
  }
  return out;
}

std::string to_conllu(const AnnotatedSentence& sentence) {
  std::string out;
  if (!sentence.sent_id.empty()) out += "# sent_id = " + sentence.sent_id + "\n";
  out += "# text = " + sentence.raw + "\n";
  for (const AnnotatedToken& t : sentence.tokens) {
    out += std::to_string(t.index) + "\t" + t.surface + "\t_\t" + t.upos +
           "\t_\t_\t" + std::to_string(t.head_index) + "\t" + t.deprel +
           "\t_\t" + (t.space_after ? "_" : "SpaceAfter=No") + "\n";
  }
  out += "\n";
  return out;
}

}  // namespace clfe
