#include "clfe/dates.h"

#include <array>
#include <cstdio>
#include <optional>

namespace clfe {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_alnum(char c) { return is_digit(c) || is_alpha(c); }

struct Cursor {
  std::string_view text;
  std::size_t pos;

  bool at_end() const { return pos >= text.size(); }
  char peek() const { return at_end() ? '\0' : text[pos]; }
};

// Reads between min and max digits; fails if more digits follow.
std::optional<int> digits(Cursor& c, std::size_t min, std::size_t max) {
  std::size_t start = c.pos;
  int value = 0;
  while (!c.at_end() && is_digit(c.peek()) && c.pos - start < max) {
    value = value * 10 + (c.peek() - '0');
    ++c.pos;
  }
  std::size_t n = c.pos - start;
  if (n < min || is_digit(c.peek())) {
    c.pos = start;
    return std::nullopt;
  }
  return value;
}

bool spaces(Cursor& c) {
  std::size_t start = c.pos;
  while (!c.at_end() && (c.peek() == ' ' || c.peek() == '\t')) ++c.pos;
  return c.pos > start;
}

bool literal(Cursor& c, char ch) {
  if (c.peek() != ch) return false;
  ++c.pos;
  return true;
}

void ordinal_suffix(Cursor& c) {
  static constexpr std::array<std::string_view, 4> kSuffixes = {"st", "nd", "rd", "th"};
  for (std::string_view s : kSuffixes) {
    if (c.text.substr(c.pos, 2) == s &&
        (c.pos + 2 >= c.text.size() || !is_alnum(c.text[c.pos + 2]))) {
      c.pos += 2;
      return;
    }
  }
}

std::optional<int> month(Cursor& c) {
  static constexpr std::array<std::string_view, 12> kFull = {
      "January", "February", "March",     "April",   "May",      "June",
      "July",    "August",   "September", "October", "November", "December"};
  std::size_t start = c.pos;
  std::size_t end = start;
  while (end < c.text.size() && is_alpha(c.text[end])) ++end;
  std::string_view word = c.text.substr(start, end - start);
  int found = 0;
  for (int m = 0; m < 12 && found == 0; ++m) {
    if (word == kFull[m] || word == kFull[m].substr(0, 3)) found = m + 1;
  }
  if (word == "Sept") found = 9;
  if (found == 0) return std::nullopt;
  c.pos = end;
  if (word != kFull[found - 1] && c.peek() == '.') ++c.pos;
  return found;
}

int days_in_month(int year, int month) {
  static constexpr std::array<int, 12> kDays = {31, 28, 31, 30, 31, 30,
                                                31, 31, 30, 31, 30, 31};
  bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
  return month == 2 && leap ? 29 : kDays[month - 1];
}

struct Match {
  std::size_t end = 0;
  int year = 0;
  int month = 0;  // 0 = absent
  int day = 0;    // 0 = absent
};

bool ends_on_boundary(const Cursor& c) {
  return c.at_end() || !is_alnum(c.peek());
}

bool valid(const Match& m) {
  if (m.month == 0) return true;
  if (m.month < 1 || m.month > 12) return false;
  if (m.day == 0) return true;
  return m.day >= 1 && m.day <= days_in_month(m.year, m.month);
}

std::optional<Match> finish(const Cursor& c, int year, int month, int day) {
  if (!ends_on_boundary(c)) return std::nullopt;
  Match m{c.pos, year, month, day};
  if (!valid(m)) return std::nullopt;
  return m;
}

// "D Month YYYY"
std::optional<Match> day_month_year(std::string_view text, std::size_t pos) {
  Cursor c{text, pos};
  auto day = digits(c, 1, 2);
  if (!day) return std::nullopt;
  ordinal_suffix(c);
  if (!spaces(c)) return std::nullopt;
  auto mon = month(c);
  if (!mon || !spaces(c)) return std::nullopt;
  auto year = digits(c, 4, 4);
  if (!year) return std::nullopt;
  return finish(c, *year, *mon, *day);
}

// "Month D, YYYY" and "Month YYYY"
std::optional<Match> month_first(std::string_view text, std::size_t pos) {
  Cursor c{text, pos};
  auto mon = month(c);
  if (!mon || !spaces(c)) return std::nullopt;
  const std::size_t after_month = c.pos;
  if (auto year = digits(c, 4, 4)) return finish(c, *year, *mon, 0);
  c.pos = after_month;
  auto day = digits(c, 1, 2);
  if (!day) return std::nullopt;
  ordinal_suffix(c);
  literal(c, ',');
  if (!spaces(c)) return std::nullopt;
  auto year = digits(c, 4, 4);
  if (!year) return std::nullopt;
  return finish(c, *year, *mon, *day);
}

// "YYYY-MM-DD"
std::optional<Match> iso_date(std::string_view text, std::size_t pos) {
  Cursor c{text, pos};
  auto year = digits(c, 4, 4);
  if (!year || !literal(c, '-')) return std::nullopt;
  auto mon = digits(c, 2, 2);
  if (!mon || !literal(c, '-')) return std::nullopt;
  auto day = digits(c, 2, 2);
  if (!day) return std::nullopt;
  return finish(c, *year, *mon, *day);
}

// "D/M/YYYY"
std::optional<Match> slashed(std::string_view text, std::size_t pos) {
  Cursor c{text, pos};
  auto day = digits(c, 1, 2);
  if (!day || !literal(c, '/')) return std::nullopt;
  auto mon = digits(c, 1, 2);
  if (!mon || !literal(c, '/')) return std::nullopt;
  auto year = digits(c, 4, 4);
  if (!year) return std::nullopt;
  return finish(c, *year, *mon, *day);
}

std::optional<Match> bare_year(std::string_view text, std::size_t pos) {
  Cursor c{text, pos};
  auto year = digits(c, 4, 4);
  if (!year || *year < 1000 || *year > 2999) return std::nullopt;
  return finish(c, *year, 0, 0);
}

std::string to_iso(const Match& m) {
  char buf[16];
  if (m.month == 0) {
    std::snprintf(buf, sizeof buf, "%04d", m.year);
  } else if (m.day == 0) {
    std::snprintf(buf, sizeof buf, "%04d-%02d", m.year, m.month);
  } else {
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", m.year, m.month, m.day);
  }
  return buf;
}

}  // namespace

std::string date_dummy(std::size_t ordinal) {
  return "__DATE_" + std::to_string(ordinal) + "__";
}

DateExtraction extract_dates(std::string_view raw) {
  using Matcher = std::optional<Match> (*)(std::string_view, std::size_t);
  static constexpr std::array<Matcher, 5> kMatchers = {
      day_month_year, month_first, iso_date, slashed, bare_year};

  DateExtraction out;
  std::size_t copied = 0;
  std::size_t i = 0;
  while (i < raw.size()) {
    const bool word_start = i == 0 || !is_alnum(raw[i - 1]);
    std::optional<Match> best;
    if (word_start && is_alnum(raw[i])) {
      for (Matcher matcher : kMatchers) {
        auto m = matcher(raw, i);
        if (m && (!best || m->end > best->end)) best = m;
      }
    }
    if (!best) {
      ++i;
      continue;
    }
    DateMention mention;
    mention.begin = i;
    mention.end = best->end;
    mention.surface = std::string(raw.substr(i, best->end - i));
    mention.iso = to_iso(*best);
    mention.dummy = date_dummy(out.mentions.size());
    out.masked.append(raw.substr(copied, i - copied));
    out.masked += mention.dummy;
    copied = best->end;
    i = best->end;
    out.mentions.push_back(std::move(mention));
  }
  out.masked.append(raw.substr(copied));
  return out;
}

std::string unmask_dates(std::string_view masked,
                         const std::vector<DateMention>& mentions) {
  std::string out;
  std::size_t pos = 0;
  for (const DateMention& m : mentions) {
    std::size_t at = masked.find(m.dummy, pos);
    if (at == std::string_view::npos) continue;
    out.append(masked.substr(pos, at - pos));
    out += m.surface;
    pos = at + m.dummy.size();
  }
  out.append(masked.substr(pos));
  return out;
}

}  // namespace clfe
