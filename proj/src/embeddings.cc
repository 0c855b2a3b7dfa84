#include "clfe/embeddings.h"

#include <charconv>
#include <cmath>

#include "clfe/errors.h"
#include "clfe/jsonl.h"
#include "clfe/text.h"

namespace clfe {

namespace {

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

bool EmbeddingStore::insert(std::string token, std::vector<double> vector) {
  if (vector.empty()) throw ValidationError("embedding has no components");
  if (dim_ == 0) dim_ = vector.size();
  if (vector.size() != dim_) {
    throw ValidationError("embedding dimension " + std::to_string(vector.size()) +
                          " differs from " + std::to_string(dim_));
  }
  std::string key = to_lower(token);
  if (index_.count(key) != 0) return false;
  index_.emplace(std::move(key), data_.size() / dim_);
  data_.insert(data_.end(), vector.begin(), vector.end());
  return true;
}

EmbeddingStore EmbeddingStore::parse(std::string_view content) {
  EmbeddingStore store;
  std::size_t line_number = 0;
  for (const std::string& line : split_lines(content)) {
    ++line_number;
    auto cols = fields(line);
    if (cols.empty()) continue;
    if (cols.size() < 2) throw LineError(line_number, "token without a vector");
    std::vector<double> vector;
    vector.reserve(cols.size() - 1);
    for (std::size_t i = 1; i < cols.size(); ++i) {
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(cols[i].data(),
                                       cols[i].data() + cols[i].size(), value);
      if (ec != std::errc() || ptr != cols[i].data() + cols[i].size() ||
          !std::isfinite(value)) {
        throw LineError(line_number,
                        "unparsable number '" + std::string(cols[i]) + "'");
      }
      vector.push_back(value);
    }
    try {
      store.insert(std::string(cols[0]), std::move(vector));
    } catch (const ValidationError& e) {
      throw LineError(line_number, e.what());
    }
  }
  return store;
}

EmbeddingStore EmbeddingStore::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

EmbeddingStore EmbeddingStore::from_entries(
    const std::vector<std::pair<std::string, std::vector<double>>>& entries) {
  EmbeddingStore store;
  for (const auto& [token, vector] : entries) store.insert(token, vector);
  return store;
}

std::optional<std::span<const double>> EmbeddingStore::find(
    std::string_view token) const {
  auto it = index_.find(to_lower(token));
  if (it == index_.end()) return std::nullopt;
  return std::span<const double>(data_.data() + it->second * dim_, dim_);
}

}  // namespace clfe
